/*
Copyright 2026 The updom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "updom/oracle.hpp"

#include "updom/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace updom {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
constexpr std::uint64_t low_mask(int count) { return count >= 64 ? ~std::uint64_t{0} : bit(count) - 1; }

void require_masks(const Graph &g) {
    if (!g.has_masks())
        throw SizeCapError("exhaustive search supports at most " +
                           std::to_string(kOracleHardLimit) + " vertices");
}

/// Vertex v is closed once v and all its neighbors are assigned; in the
/// natural order that happens at index max(v, max neighbor).
std::vector<std::vector<Vertex>> closing_schedule(const Graph &g) {
    std::vector<std::vector<Vertex>> at(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        int last = v;
        for (Vertex w : g.neighbors(v))
            last = std::max(last, w);
        at[static_cast<size_t>(last)].push_back(v);
    }
    return at;
}

// ---------------------------------------------------------------------------
// Upper domatic search over restricted-growth strings.
//
// blocked_[a] bit b: block a can no longer dominate block b, because some
// closed vertex of b has no neighbor in a. A pair blocked both ways is dead.
// future_blocked_ bit b: blocks not yet opened cannot dominate b.
// ---------------------------------------------------------------------------

class UpperDomaticSearch {
  public:
    UpperDomaticSearch(const Graph &g, int k)
        : g_(g), n_(g.order()), k_(k), block_(static_cast<size_t>(g.order()), -1),
          close_at_(closing_schedule(g)) {}

    void run(const std::function<bool(std::span<const int>)> &visit) {
        visit_ = &visit;
        stop_ = false;
        blocked_.fill(0);
        future_blocked_ = 0;
        if (k_ >= 1 && k_ <= n_ && k_ <= 64)
            recurse(0, 0);
    }

  private:
    bool close_vertices(int i, int used) {
        const std::uint64_t existing = low_mask(used);
        for (Vertex v : close_at_[static_cast<size_t>(i)]) {
            const int bv = block_[static_cast<size_t>(v)];
            std::uint64_t near = 0;
            for (Vertex w : g_.neighbors(v))
                near |= bit(block_[static_cast<size_t>(w)]);
            std::uint64_t missing = existing & ~near & ~bit(bv);
            while (missing) {
                const int a = std::countr_zero(missing);
                missing &= missing - 1;
                blocked_[static_cast<size_t>(a)] |= bit(bv);
                if (blocked_[static_cast<size_t>(bv)] & bit(a))
                    return false;
            }
            future_blocked_ |= bit(bv);
        }
        return true;
    }

    void recurse(int i, int used) {
        if (i == n_) {
            if (used == k_ && !(*visit_)(block_))
                stop_ = true;
            return;
        }
        if (used + (n_ - i) < k_)
            return;
        const int top = std::min(used, k_ - 1);
        for (int b = 0; b <= top && !stop_; ++b) {
            const auto saved = blocked_;
            const auto saved_future = future_blocked_;
            int now_used = used;
            if (b == used) {
                blocked_[static_cast<size_t>(b)] = future_blocked_;
                ++now_used;
            }
            block_[static_cast<size_t>(i)] = b;
            if (close_vertices(i, now_used))
                recurse(i + 1, now_used);
            blocked_ = saved;
            future_blocked_ = saved_future;
        }
        block_[static_cast<size_t>(i)] = -1;
    }

    const Graph &g_;
    int n_;
    int k_;
    std::vector<int> block_;
    std::vector<std::vector<Vertex>> close_at_;
    std::array<std::uint64_t, 64> blocked_{};
    std::uint64_t future_blocked_ = 0;
    const std::function<bool(std::span<const int>)> *visit_ = nullptr;
    bool stop_ = false;
};

/// Partition into k dominating sets: a closed vertex must see all k blocks
/// in its closed neighborhood.
class DomaticSearch {
  public:
    DomaticSearch(const Graph &g, int k)
        : g_(g), n_(g.order()), k_(k), block_(static_cast<size_t>(g.order()), -1),
          close_at_(closing_schedule(g)) {}

    bool run(std::vector<int> *out) {
        if (k_ < 1 || k_ > n_ || k_ > 64)
            return false;
        if (!recurse(0, 0))
            return false;
        if (out)
            *out = block_;
        return true;
    }

  private:
    bool recurse(int i, int used) {
        if (i == n_)
            return used == k_;
        if (used + (n_ - i) < k_)
            return false;
        const int top = std::min(used, k_ - 1);
        for (int b = 0; b <= top; ++b) {
            block_[static_cast<size_t>(i)] = b;
            bool ok = true;
            for (Vertex v : close_at_[static_cast<size_t>(i)]) {
                std::uint64_t seen = bit(block_[static_cast<size_t>(v)]);
                for (Vertex w : g_.neighbors(v))
                    seen |= bit(block_[static_cast<size_t>(w)]);
                if (seen != low_mask(k_)) {
                    ok = false;
                    break;
                }
            }
            if (ok && recurse(i + 1, used + (b == used)))
                return true;
        }
        block_[static_cast<size_t>(i)] = -1;
        return false;
    }

    const Graph &g_;
    int n_;
    int k_;
    std::vector<int> block_;
    std::vector<std::vector<Vertex>> close_at_;
};

// ---------------------------------------------------------------------------
// Labeling search for transitive and Grundy partitions.
// ---------------------------------------------------------------------------

/// Greedy bound used for the tree recurrence: the largest z with a
/// subsequence of the sorted values satisfying value_q >= q.
int greedy_chain(std::vector<int> &values) {
    std::sort(values.begin(), values.end());
    int count = 0;
    for (int v : values)
        if (v >= count + 1)
            ++count;
    return count;
}

class LabelSearch {
  public:
    LabelSearch(const Graph &g, const std::vector<Vertex> &vertices,
                const std::vector<std::pair<Vertex, int>> &fixed, std::vector<int> upper,
                bool grundy)
        : g_(g), grundy_(grundy), upper_(std::move(upper)),
          label_(static_cast<size_t>(g.order()), 0),
          open_(static_cast<size_t>(g.order()), 0), have_(static_cast<size_t>(g.order()), 0),
          count_(static_cast<size_t>(g.order()) * 65, 0), fixed_(static_cast<size_t>(g.order()), 0) {
        for (auto [v, l] : fixed)
            fixed_[static_cast<size_t>(v)] = l;
        // Breadth-first from the fixed vertices so that constraints close early.
        std::vector<char> in_scope(static_cast<size_t>(g.order()), 0);
        for (Vertex v : vertices)
            in_scope[static_cast<size_t>(v)] = 1;
        std::vector<char> queued(static_cast<size_t>(g.order()), 0);
        auto push = [&](Vertex v) {
            if (in_scope[static_cast<size_t>(v)] && !queued[static_cast<size_t>(v)]) {
                queued[static_cast<size_t>(v)] = 1;
                order_.push_back(v);
            }
        };
        for (auto [v, l] : fixed)
            push(v);
        for (size_t head = 0;; ++head) {
            if (head == order_.size()) {
                Vertex next = -1;
                for (Vertex v : vertices)
                    if (!queued[static_cast<size_t>(v)]) {
                        next = v;
                        break;
                    }
                if (next < 0)
                    break;
                push(next);
            }
            for (Vertex w : g.neighbors(order_[head]))
                push(w);
        }
        for (Vertex v : vertices)
            for (Vertex w : g.neighbors(v))
                if (in_scope[static_cast<size_t>(w)])
                    ++open_[static_cast<size_t>(v)];
    }

    bool run() { return recurse(0); }
    int label(Vertex v) const { return label_[static_cast<size_t>(v)]; }

  private:
    int &count(Vertex v, int l) { return count_[static_cast<size_t>(v) * 65 + static_cast<size_t>(l)]; }

    /// The labels v still lacks can be supplied by its unassigned neighbors;
    /// domains are prefixes {1..upper}, so a sorted comparison decides it.
    bool satisfiable(Vertex v) {
        const int l = label_[static_cast<size_t>(v)];
        std::uint64_t need = low_mask(l - 1) & ~have_[static_cast<size_t>(v)];
        if (!need)
            return true;
        const int missing = std::popcount(need);
        if (missing > open_[static_cast<size_t>(v)])
            return false;
        std::array<int, 64> supply{};
        int s = 0;
        for (Vertex w : g_.neighbors(v))
            if (label_[static_cast<size_t>(w)] == 0 && s < 64)
                supply[static_cast<size_t>(s++)] = upper_[static_cast<size_t>(w)];
        if (s < missing)
            return false;
        std::sort(supply.begin(), supply.begin() + s, std::greater<>());
        int idx = 0;
        for (int want = 64; want >= 1 && idx < missing; --want)
            if (need & bit(want - 1)) {
                if (supply[static_cast<size_t>(idx)] < want)
                    return false;
                ++idx;
            }
        return true;
    }

    void assign(Vertex v, int l) {
        label_[static_cast<size_t>(v)] = l;
        for (Vertex w : g_.neighbors(v)) {
            if (++count(w, l) == 1)
                have_[static_cast<size_t>(w)] |= bit(l - 1);
            --open_[static_cast<size_t>(w)];
        }
    }

    void unassign(Vertex v) {
        const int l = label_[static_cast<size_t>(v)];
        label_[static_cast<size_t>(v)] = 0;
        for (Vertex w : g_.neighbors(v)) {
            if (--count(w, l) == 0)
                have_[static_cast<size_t>(w)] &= ~bit(l - 1);
            ++open_[static_cast<size_t>(w)];
        }
    }

    bool consistent_after(Vertex v) {
        if (!satisfiable(v))
            return false;
        for (Vertex w : g_.neighbors(v))
            if (label_[static_cast<size_t>(w)] != 0 && !satisfiable(w))
                return false;
        return true;
    }

    bool recurse(size_t i) {
        if (i == order_.size())
            return true;
        const Vertex v = order_[i];
        const int forced = fixed_[static_cast<size_t>(v)];
        const int hi = forced ? forced : upper_[static_cast<size_t>(v)];
        const int lo = forced ? forced : 1;
        for (int l = hi; l >= lo; --l) {
            if (grundy_ && (have_[static_cast<size_t>(v)] & bit(l - 1)))
                continue;
            assign(v, l);
            if (consistent_after(v) && recurse(i + 1))
                return true;
            unassign(v);
        }
        return false;
    }

    const Graph &g_;
    bool grundy_;
    std::vector<int> upper_;
    std::vector<int> label_;
    std::vector<int> open_;
    std::vector<std::uint64_t> have_;
    std::vector<int> count_;
    std::vector<int> fixed_;
    std::vector<Vertex> order_;
};

/// Per-vertex upper bounds on any feasible label, tightened to a fixed point
/// of the greedy chain bound. Returns false when a fixed label is impossible.
bool label_bounds(const Graph &g, const LabelingQuery &query, std::vector<int> &upper) {
    const int n = g.order();
    const int cap = query.max_label > 0 ? std::min(query.max_label, 64) : 64;
    upper.assign(static_cast<size_t>(n), 0);
    std::vector<int> fixed(static_cast<size_t>(n), 0);
    for (auto [v, l] : query.fixed) {
        if (v < 0 || v >= n)
            throw ContractError("fixed vertex out of range");
        if (l < 1)
            return false;
        if (fixed[static_cast<size_t>(v)] && fixed[static_cast<size_t>(v)] != l)
            return false;
        fixed[static_cast<size_t>(v)] = l;
    }
    for (int v = 0; v < n; ++v) {
        upper[static_cast<size_t>(v)] = std::min(cap, g.degree(v) + 1);
        if (int f = fixed[static_cast<size_t>(v)]) {
            if (f > upper[static_cast<size_t>(v)])
                return false;
            upper[static_cast<size_t>(v)] = f;
        }
    }
    std::vector<int> values;
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            values.clear();
            for (Vertex w : g.neighbors(v))
                values.push_back(upper[static_cast<size_t>(w)]);
            const int bound = 1 + greedy_chain(values);
            if (fixed[static_cast<size_t>(v)]) {
                if (bound < fixed[static_cast<size_t>(v)])
                    return false;
            } else if (bound < upper[static_cast<size_t>(v)]) {
                upper[static_cast<size_t>(v)] = bound;
                changed = true;
            }
        }
    }
    return true;
}

std::vector<int> first_fit_coloring(const Graph &g, const std::vector<Vertex> &vertices,
                                    std::vector<int> &label) {
    for (Vertex v : vertices) {
        std::uint64_t used = 0;
        for (Vertex w : g.neighbors(v))
            if (label[static_cast<size_t>(w)] > 0)
                used |= bit(label[static_cast<size_t>(w)] - 1);
        label[static_cast<size_t>(v)] = std::countr_one(used) + 1;
    }
    return label;
}

} // namespace

// ---------------------------------------------------------------------------
// Restricted-growth strings
// ---------------------------------------------------------------------------

void enumerate_partitions(int n, int k, const std::function<bool(std::span<const int>)> &fn) {
    if (n < 1 || k < 1 || k > n)
        throw ContractError("enumerate_partitions: need 1 <= k <= n");
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (stop)
            return;
        if (i == n) {
            if (used == k && !fn(rgs))
                stop = true;
            return;
        }
        if (used + (n - i) < k)
            return;
        for (int b = 0; b <= std::min(used, k - 1) && !stop; ++b) {
            rgs[static_cast<size_t>(i)] = b;
            rec(i + 1, used + (b == used));
        }
    };
    rec(0, 0);
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0)
        return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<size_t>(n) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<std::uint64_t>(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return k > n ? 0 : s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// Upper domatic and domatic
// ---------------------------------------------------------------------------

bool upper_domatic_feasible(const Graph &g, int k, VertexPartition *witness) {
    require_masks(g);
    if (k < 1 || k > g.order() || k > g.max_degree() + 1)
        return false;
    bool found = false;
    UpperDomaticSearch search(g, k);
    search.run([&](std::span<const int> rgs) {
        found = true;
        if (witness)
            *witness = VertexPartition::from_labels(rgs);
        return false;
    });
    return found;
}

void for_each_upper_domatic_partition(const Graph &g, int k,
                                      const std::function<bool(const VertexPartition &)> &fn) {
    require_masks(g);
    if (k < 1 || k > g.order())
        return;
    UpperDomaticSearch search(g, k);
    search.run([&](std::span<const int> rgs) { return fn(VertexPartition::from_labels(rgs)); });
}

bool domatic_feasible(const Graph &g, int k, VertexPartition *witness) {
    require_masks(g);
    if (k < 1 || k > g.order() || k > g.min_degree() + 1)
        return false;
    std::vector<int> rgs;
    DomaticSearch search(g, k);
    if (!search.run(&rgs))
        return false;
    if (witness)
        *witness = VertexPartition::from_labels(rgs);
    return true;
}

SolveResult upper_domatic_bf(const Graph &g) {
    require_masks(g);
    if (g.order() == 0)
        return {0, {}};
    // Merging two blocks keeps a partition upper domatic, so feasibility is
    // monotone in k and the first infeasible order ends the search.
    SolveResult best{1, VertexPartition::from_labels(std::vector<int>(static_cast<size_t>(g.order()), 0))};
    for (int k = 2; k <= std::min(g.order(), g.max_degree() + 1); ++k) {
        VertexPartition w;
        if (!upper_domatic_feasible(g, k, &w))
            break;
        best = {k, std::move(w)};
    }
    return best;
}

SolveResult domatic_bf(const Graph &g) {
    require_masks(g);
    if (g.order() == 0)
        return {0, {}};
    SolveResult best{1, VertexPartition::from_labels(std::vector<int>(static_cast<size_t>(g.order()), 0))};
    for (int k = 2; k <= std::min(g.order(), g.min_degree() + 1); ++k) {
        VertexPartition w;
        if (!domatic_feasible(g, k, &w))
            break;
        best = {k, std::move(w)};
    }
    return best;
}

void for_each_D_partition(const Graph &g, const std::function<bool(const VertexPartition &)> &fn,
                          int d_value) {
    if (g.order() == 0)
        return;
    const int d = d_value > 0 ? d_value : upper_domatic_bf(g).value;
    for_each_upper_domatic_partition(g, d, fn);
}

std::vector<VertexPartition> all_D_partitions(const Graph &g, int d_value) {
    std::vector<VertexPartition> out;
    for_each_D_partition(
        g,
        [&](const VertexPartition &p) {
            out.push_back(p);
            return true;
        },
        d_value);
    return out;
}

std::optional<VertexPartition> exists_sink_D_partition(const Graph &g, int d_value) {
    std::optional<VertexPartition> out;
    for_each_D_partition(
        g,
        [&](const VertexPartition &p) {
            if (!sinks(domination_digraph(g, p)).empty()) {
                out = p;
                return false;
            }
            return true;
        },
        d_value);
    return out;
}

std::optional<VertexPartition> exists_source_D_partition(const Graph &g, int d_value) {
    std::optional<VertexPartition> out;
    for_each_D_partition(
        g,
        [&](const VertexPartition &p) {
            if (!sources(domination_digraph(g, p)).empty()) {
                out = p;
                return false;
            }
            return true;
        },
        d_value);
    return out;
}

// ---------------------------------------------------------------------------
// Labelings
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> find_labeling(const Graph &g, const LabelingQuery &query) {
    require_masks(g);
    std::vector<int> upper;
    if (!label_bounds(g, query, upper))
        return std::nullopt;
    std::vector<int> label(static_cast<size_t>(g.order()), 0);
    // Components are independent; each is solved on its own.
    for (const auto &comp : components(g)) {
        std::vector<std::pair<Vertex, int>> fixed;
        for (auto [v, l] : query.fixed)
            if (std::binary_search(comp.begin(), comp.end(), v))
                fixed.emplace_back(v, l);
        if (fixed.empty() && !query.grundy) {
            for (Vertex v : comp)
                label[static_cast<size_t>(v)] = 1;
            continue;
        }
        if (fixed.empty() && query.max_label == 0) {
            first_fit_coloring(g, comp, label);
            continue;
        }
        LabelSearch search(g, comp, fixed, upper, query.grundy);
        if (!search.run())
            return std::nullopt;
        for (Vertex v : comp)
            label[static_cast<size_t>(v)] = search.label(v);
    }
    return label;
}

VertexPartition partition_from_labeling(std::span<const int> labeling) {
    std::vector<int> zero_based(labeling.begin(), labeling.end());
    for (int &l : zero_based)
        --l;
    return VertexPartition::from_labels(zero_based);
}

namespace {

SolveResult labeling_number(const Graph &g, bool grundy) {
    require_masks(g);
    if (g.order() == 0)
        return {0, {}};
    std::vector<int> best;
    {
        LabelingQuery base;
        base.grundy = grundy;
        best = *find_labeling(g, base);
    }
    int value = *std::max_element(best.begin(), best.end());
    // Feasibility of "some vertex reaches label k" is monotone in k.
    for (int k = value + 1; k <= std::min(g.order(), g.max_degree() + 1); ++k) {
        LabelingQuery probe;
        probe.grundy = grundy;
        probe.max_label = grundy ? 0 : k;
        std::vector<int> upper;
        if (!label_bounds(g, probe, upper))
            break;
        std::optional<std::vector<int>> hit;
        for (int r = 0; r < g.order() && !hit; ++r) {
            if (upper[static_cast<size_t>(r)] < k)
                continue;
            probe.fixed = {{r, k}};
            hit = find_labeling(g, probe);
        }
        if (!hit)
            break;
        best = std::move(*hit);
        value = *std::max_element(best.begin(), best.end());
        k = value;
    }
    return {value, partition_from_labeling(best)};
}

} // namespace

SolveResult transitivity_bf(const Graph &g) { return labeling_number(g, false); }
SolveResult grundy_bf(const Graph &g) { return labeling_number(g, true); }

int transitive_number_bf(const Graph &g, Vertex v) {
    require_masks(g);
    for (int l = g.degree(v) + 1; l >= 1; --l) {
        LabelingQuery q;
        q.fixed = {{v, l}};
        if (find_labeling(g, q))
            return l;
    }
    return 1;
}

bool pair_achievable(const Graph &g, Vertex p, int p_label, Vertex q, int q_label) {
    require_masks(g);
    if (p == q)
        throw ContractError("pair_achievable: vertices must differ");
    LabelingQuery query;
    query.fixed = {{q, q_label}, {p, p_label}};
    return find_labeling(g, query).has_value();
}

int constrained_position_max(const Graph &g, Vertex p, Vertex q, int q_label) {
    require_masks(g);
    if (p == q)
        throw ContractError("constrained_position_max: vertices must differ");
    if (q_label < 1)
        return 0;
    for (int i = g.degree(p) + 1; i >= 1; --i)
        if (pair_achievable(g, p, i, q, q_label))
            return i;
    return 0;
}

std::vector<std::pair<int, int>> achievable_pairs(const Graph &g, Vertex p, Vertex q) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= g.degree(p) + 1; ++i)
        for (int j = 1; j <= g.degree(q) + 1; ++j)
            if (pair_achievable(g, p, i, q, j))
                out.emplace_back(i, j);
    return out;
}

} // namespace updom
