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

#include "updom/unicyclic.hpp"

#include "updom/error.hpp"
#include "updom/tree_solver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace updom {

namespace {

std::vector<int> bfs_distance(const Graph &g, Vertex s) {
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

/// Positions `need` (any order) can be matched to distinct helpers whose
/// value bounds the position from above.
bool coverable(std::vector<int> need, std::vector<int> helpers) {
    if (need.size() > helpers.size())
        return false;
    std::sort(need.rbegin(), need.rend());
    std::sort(helpers.rbegin(), helpers.rend());
    for (size_t i = 0; i < need.size(); ++i)
        if (helpers[i] < need[i])
            return false;
    return true;
}

/// Matching for `coverable`: result[i] is the position given to helper i,
/// 0 when unused.
std::vector<int> cover_assignment(const std::vector<int> &need, const std::vector<int> &helpers) {
    std::vector<int> pos(need);
    std::sort(pos.rbegin(), pos.rend());
    std::vector<size_t> idx(helpers.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return helpers[a] > helpers[b]; });
    std::vector<int> out(helpers.size(), 0);
    for (size_t i = 0; i < pos.size(); ++i)
        out[idx[i]] = pos[i];
    return out;
}

bool contained(const std::vector<int> &a, const std::vector<int> &b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// Ordering
// ---------------------------------------------------------------------------

std::vector<Vertex> SigmaOrdering::children(const Graph &g, Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (level[static_cast<size_t>(w)] > level[static_cast<size_t>(v)])
            out.push_back(w);
    return out;
}

SigmaOrdering sigma_ordering(const Graph &g, Vertex root) {
    auto cert = recognize_unicyclic(g);
    if (!cert)
        throw ClassMismatchError("sigma_ordering: graph is not unicyclic");
    return sigma_ordering(g, root, *cert);
}

SigmaOrdering sigma_ordering(const Graph &g, Vertex root, const UnicyclicCertificate &cert) {
    const int n = g.order();
    if (root < 0 || root >= n)
        throw ContractError("sigma_ordering: root out of range");
    SigmaOrdering s;
    s.root = root;
    auto dist = bfs_distance(g, root);
    std::vector<char> on_cycle(static_cast<size_t>(n), 0);
    for (Vertex c : cert.cycle)
        on_cycle[static_cast<size_t>(c)] = 1;
    s.entry = cert.cycle.front();
    for (Vertex c : cert.cycle)
        if (dist[static_cast<size_t>(c)] < dist[static_cast<size_t>(s.entry)])
            s.entry = c;
    s.entry_level = dist[static_cast<size_t>(s.entry)];

    // Walk the cycle from the entry toward its lower-id cycle neighbor.
    const auto &cyc = cert.cycle;
    const size_t k = cyc.size();
    const size_t at = static_cast<size_t>(std::find(cyc.begin(), cyc.end(), s.entry) - cyc.begin());
    const Vertex fwd = cyc[(at + 1) % k];
    const Vertex bwd = cyc[(at + k - 1) % k];
    for (size_t i = 0; i < k; ++i)
        s.cycle.push_back(fwd < bwd ? cyc[(at + i) % k] : cyc[(at + k - i) % k]);

    // Distance from each vertex to the cycle vertex its tree hangs from.
    std::vector<Vertex> attach(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), -1);
    std::queue<Vertex> q;
    for (Vertex c : cyc) {
        attach[static_cast<size_t>(c)] = c;
        depth[static_cast<size_t>(c)] = 0;
        q.push(c);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (depth[static_cast<size_t>(w)] < 0) {
                depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                attach[static_cast<size_t>(w)] = attach[static_cast<size_t>(v)];
                q.push(w);
            }
    }
    s.level.assign(static_cast<size_t>(n), 0);
    int deepest = 0;
    for (int v = 0; v < n; ++v) {
        const Vertex a = attach[static_cast<size_t>(v)];
        s.level[static_cast<size_t>(v)] =
            a == s.entry ? dist[static_cast<size_t>(v)] : s.entry_level + 1 + depth[static_cast<size_t>(v)];
        deepest = std::max(deepest, s.level[static_cast<size_t>(v)]);
    }
    for (int lv = deepest; lv >= 0; --lv) {
        if (lv == s.entry_level + 1)
            for (size_t i = 1; i < k; ++i)
                s.order.push_back(s.cycle[i]);
        for (int v = 0; v < n; ++v)
            if (s.level[static_cast<size_t>(v)] == lv &&
                !(lv == s.entry_level + 1 && on_cycle[static_cast<size_t>(v)]))
                s.order.push_back(v);
    }
    return s;
}

std::vector<Vertex> rooted_subgraph(const Graph &g, const SigmaOrdering &sigma, Vertex x) {
    const int base = sigma.level[static_cast<size_t>(x)];
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<Vertex> out{x};
    seen[static_cast<size_t>(x)] = 1;
    for (size_t head = 0; head < out.size(); ++head)
        for (Vertex w : g.neighbors(out[head]))
            if (!seen[static_cast<size_t>(w)] && sigma.level[static_cast<size_t>(w)] > base) {
                seen[static_cast<size_t>(w)] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Path analysis
// ---------------------------------------------------------------------------

std::vector<Vertex> PathAnalysis::common() const {
    std::vector<Vertex> out;
    for (Vertex w : first_needs)
        if (std::find(second_needs.begin(), second_needs.end(), w) != second_needs.end())
            out.push_back(w);
    return out;
}

namespace {

/// Prefix of `walk` (starting at the endpoint) whose deletion lowers the
/// endpoint's value by one, and the positions of its elements.
void grow_prefix(const Graph &g, std::span<const char> outside, const std::vector<Vertex> &walk,
                 int value, std::vector<Vertex> &prefix, std::vector<std::vector<int>> &positions) {
    const Vertex end = walk.front();
    prefix = {end};
    for (size_t j = 1; j < walk.size(); ++j) {
        if (rooted_dp(g, end, outside, walk[j]).value(end) != value - 1)
            break;
        prefix.push_back(walk[j]);
    }
    const size_t alpha = prefix.size();
    positions.assign(alpha, {});
    positions[0] = {value};
    // Interior elements are pinned to their value in the subtree hanging
    // away from the previous element.
    for (size_t j = 1; j + 1 < alpha; ++j)
        positions[j] = {rooted_dp(g, prefix[j], outside, prefix[j - 1]).value(prefix[j])};
    if (alpha >= 2) {
        const Vertex parent = prefix[alpha - 2];
        const Vertex grand = alpha >= 3 ? prefix[alpha - 3] : -1;
        auto dp = rooted_dp(g, parent, outside, grand);
        positions[alpha - 1] = allowed_positions(dp, parent, prefix[alpha - 1]);
    }
}

} // namespace

PathAnalysis compute_XY(const Graph &g, std::span<const char> outside, std::span<const Vertex> path) {
    if (path.size() < 2)
        throw ContractError("compute_XY: path needs two distinct endpoints");
    PathAnalysis a;
    a.path.assign(path.begin(), path.end());
    a.outside.assign(outside.begin(), outside.end());
    const Vertex p = a.first();
    const Vertex q = a.second();
    a.first_value = transitive_number(g, p, outside);
    a.second_value = transitive_number(g, q, outside);
    std::vector<Vertex> reversed(a.path.rbegin(), a.path.rend());
    grow_prefix(g, outside, a.path, a.first_value, a.first_needs, a.first_positions);
    grow_prefix(g, outside, reversed, a.second_value, a.second_needs, a.second_positions);
    a.first_cut_value = rooted_dp(g, p, outside, a.path[1]).value(p);
    a.second_cut_value = rooted_dp(g, q, outside, a.path[a.path.size() - 2]).value(q);
    auto top = [](const std::vector<int> &s) { return s.empty() ? 0 : s.back(); };
    if (auto it = std::find(a.second_needs.begin(), a.second_needs.end(), p); it != a.second_needs.end())
        a.first_constrained_max = top(a.second_positions[static_cast<size_t>(it - a.second_needs.begin())]);
    if (auto it = std::find(a.first_needs.begin(), a.first_needs.end(), q); it != a.first_needs.end())
        a.second_constrained_max = top(a.first_positions[static_cast<size_t>(it - a.first_needs.begin())]);
    return a;
}

std::vector<int> prefix_positions(const PathAnalysis &a, Vertex w, bool first_side) {
    const auto &needs = first_side ? a.first_needs : a.second_needs;
    const auto &pos = first_side ? a.first_positions : a.second_positions;
    auto it = std::find(needs.begin(), needs.end(), w);
    if (it == needs.end())
        throw ContractError("prefix_positions: vertex not in prefix");
    return pos[static_cast<size_t>(it - needs.begin())];
}

bool agrees(const PathAnalysis &a, Vertex w) {
    auto x = prefix_positions(a, w, true);
    auto y = prefix_positions(a, w, false);
    std::vector<int> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return !both.empty();
}

std::string_view to_string(PathCase c) {
    switch (c) {
    case PathCase::Disjoint: return "disjoint";
    case PathCase::AllAgree: return "all-agree";
    case PathCase::NeitherInside: return "neither-inside";
    case PathCase::FirstInside: return "first-inside";
    case PathCase::SecondInside: return "second-inside";
    case PathCase::BothInside: return "both-inside";
    }
    return "?";
}

LSequenceCandidates maximal_l_sequences(std::span<const int> other_values, const PathAnalysis &a) {
    LSequenceCandidates out;
    const int lp = a.first_value, lq = a.second_value;
    const int lp1 = a.first_cut_value, lq1 = a.second_cut_value;
    const int lps = a.first_constrained_max, lqs = a.second_constrained_max;
    auto common = a.common();
    bool all_agree = true;
    for (Vertex w : common)
        all_agree = all_agree && agrees(a, w);
    if (common.empty()) {
        out.which = PathCase::Disjoint;
        out.pairs = {{lp, lq}};
    } else if (all_agree) {
        out.which = PathCase::AllAgree;
        out.pairs = {{lp, lq}};
    } else {
        const auto &xs = a.first_needs;
        const auto &ys = a.second_needs;
        const bool q_in_x = std::find(xs.begin(), xs.end(), a.second()) != xs.end();
        const bool p_in_y = std::find(ys.begin(), ys.end(), a.first()) != ys.end();
        if (!q_in_x && !p_in_y) {
            out.which = PathCase::NeitherInside;
            out.pairs = {{lp, lq1}, {lp1, lq}};
        } else if (!q_in_x && p_in_y) {
            out.which = PathCase::FirstInside;
            out.pairs = {{lp, lq1}, {lps, lq}};
        } else if (q_in_x && !p_in_y) {
            out.which = PathCase::SecondInside;
            out.pairs = {{lp, lqs}, {lp1, lq}};
        } else {
            out.which = PathCase::BothInside;
            out.pairs = {{lp, lqs}, {lp1, lq1}, {lps, lq}};
        }
    }
    std::vector<std::vector<int>> seqs;
    for (auto [x, y] : out.pairs) {
        std::vector<int> s(other_values.begin(), other_values.end());
        s.push_back(x);
        s.push_back(y);
        std::sort(s.begin(), s.end());
        seqs.push_back(std::move(s));
    }
    std::sort(seqs.begin(), seqs.end());
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    for (size_t i = 0; i < seqs.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < seqs.size() && !dominated; ++j)
            dominated = i != j && contained(seqs[i], seqs[j]);
        if (!dominated)
            out.sequences.push_back(seqs[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rooted numbers
// ---------------------------------------------------------------------------

namespace {

struct EntryParts {
    std::vector<char> outside;
    std::vector<Vertex> path;
    std::vector<Vertex> others;
};

EntryParts entry_parts(const Graph &g, const SigmaOrdering &s) {
    EntryParts e;
    const int n = g.order();
    e.outside.assign(static_cast<size_t>(n), 1);
    // T = every vertex reachable from the cycle without passing the entry.
    std::vector<Vertex> stack(s.cycle.begin() + 1, s.cycle.end());
    for (Vertex v : stack)
        e.outside[static_cast<size_t>(v)] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (w != s.entry && e.outside[static_cast<size_t>(w)]) {
                e.outside[static_cast<size_t>(w)] = 0;
                stack.push_back(w);
            }
    }
    e.path.assign(s.cycle.begin() + 1, s.cycle.end());
    for (Vertex c : s.children(g, s.entry))
        if (e.outside[static_cast<size_t>(c)])
            e.others.push_back(c);
    return e;
}

} // namespace

std::vector<std::vector<int>> maximal_l_sequences(const Graph &g, const SigmaOrdering &sigma,
                                                  std::span<const int> rooted, Vertex c) {
    auto kids = sigma.children(g, c);
    if (kids.empty())
        throw ContractError("maximal_l_sequences: vertex has no children");
    if (c != sigma.entry) {
        std::vector<int> seq;
        for (Vertex k : kids)
            seq.push_back(rooted[static_cast<size_t>(k)]);
        std::sort(seq.begin(), seq.end());
        return {seq};
    }
    auto parts = entry_parts(g, sigma);
    std::vector<int> others;
    for (Vertex k : parts.others)
        others.push_back(rooted[static_cast<size_t>(k)]);
    return maximal_l_sequences(others, compute_XY(g, parts.outside, parts.path)).sequences;
}

RootedUnicyclic rooted_transitive_numbers_uc(const Graph &g, Vertex root) {
    auto cert = recognize_unicyclic(g);
    if (!cert)
        throw ClassMismatchError("graph is not unicyclic");
    return rooted_transitive_numbers_uc(g, root, *cert);
}

RootedUnicyclic rooted_transitive_numbers_uc(const Graph &g, Vertex root,
                                             const UnicyclicCertificate &cert) {
    RootedUnicyclic r;
    r.sigma = sigma_ordering(g, root, cert);
    r.rooted.assign(static_cast<size_t>(g.order()), 0);
    for (Vertex v : r.sigma.order) {
        if (v == r.sigma.entry) {
            auto parts = entry_parts(g, r.sigma);
            std::vector<int> others;
            for (Vertex k : parts.others)
                others.push_back(r.rooted[static_cast<size_t>(k)]);
            r.analysis = compute_XY(g, parts.outside, parts.path);
            r.candidates = maximal_l_sequences(others, r.analysis);
            r.entry_other_children = parts.others;
            int z = 0;
            for (const auto &seq : r.candidates.sequences)
                z = std::max(z, z_value(seq));
            r.rooted[static_cast<size_t>(v)] = 1 + z;
            continue;
        }
        std::vector<int> values;
        for (Vertex k : r.sigma.children(g, v))
            values.push_back(r.rooted[static_cast<size_t>(k)]);
        r.rooted[static_cast<size_t>(v)] = 1 + z_value(values);
    }
    return r;
}

int rooted_transitive_number_uc(const Graph &g, Vertex root) {
    auto r = rooted_transitive_numbers_uc(g, root);
    return r.rooted[static_cast<size_t>(root)];
}

// ---------------------------------------------------------------------------
// Exact path frontier
// ---------------------------------------------------------------------------

namespace {

struct PathModel {
    std::vector<Vertex> path;
    std::vector<std::vector<Vertex>> hanging;     // tree children of each path vertex
    std::vector<std::vector<int>> hanging_values; // their rooted numbers
    std::vector<int> bound;                       // label bound per path vertex
};

PathModel path_model(const Graph &g, std::span<const char> outside, std::span<const Vertex> path) {
    PathModel m;
    m.path.assign(path.begin(), path.end());
    const size_t len = path.size();
    std::vector<char> on_path(static_cast<size_t>(g.order()), 0);
    for (Vertex v : path)
        on_path[static_cast<size_t>(v)] = 1;
    m.hanging.resize(len);
    m.hanging_values.resize(len);
    m.bound.resize(len);
    for (size_t i = 0; i < len; ++i) {
        const Vertex w = path[i];
        for (Vertex h : g.neighbors(w)) {
            if (outside[static_cast<size_t>(h)] || on_path[static_cast<size_t>(h)])
                continue;
            m.hanging[i].push_back(h);
            m.hanging_values[i].push_back(rooted_dp(g, h, outside, w).value(h));
        }
        const int path_nbrs = (i > 0) + (i + 1 < len);
        m.bound[i] = 1 + path_nbrs + static_cast<int>(m.hanging[i].size());
    }
    return m;
}

/// Labels 1..label-1 missing from the path neighbors can be supplied by the
/// hanging subtrees of path vertex i. A neighbor label of 0 means absent.
bool path_vertex_ok(const PathModel &m, size_t i, int label, int left, int right) {
    std::vector<int> need;
    for (int s = 1; s < label; ++s)
        if (s != left && s != right)
            need.push_back(s);
    return coverable(need, m.hanging_values[i]);
}

/// Layered search over (previous label, current label) with parent links.
struct FrontierSearch {
    const PathModel &m;
    // layer[i] maps (label_{i-1}, label_i) to the label_{i-2} it came from.
    std::vector<std::map<std::pair<int, int>, int>> layer;

    explicit FrontierSearch(const PathModel &model) : m(model) {}

    void run(int first_label) {
        const size_t len = m.path.size();
        layer.assign(len, {});
        for (int b = 1; b <= m.bound[1]; ++b) {
            if (!path_vertex_ok(m, 0, first_label, 0, b))
                continue;
            layer[1][{first_label, b}] = 0;
        }
        for (size_t i = 1; i + 1 < len; ++i)
            for (const auto &[state, from] : layer[i]) {
                (void)from;
                auto [prev, cur] = state;
                for (int next = 1; next <= m.bound[i + 1]; ++next)
                    if (path_vertex_ok(m, i, cur, prev, next) && !layer[i + 1].count({cur, next}))
                        layer[i + 1][{cur, next}] = prev;
            }
    }

    /// Last labels achievable with the final requirement checked.
    std::vector<int> finals() const {
        const size_t len = m.path.size();
        std::set<int> out;
        for (const auto &[state, from] : layer[len - 1]) {
            (void)from;
            if (path_vertex_ok(m, len - 1, state.second, state.first, 0))
                out.insert(state.second);
        }
        return {out.begin(), out.end()};
    }

    std::vector<int> trace(int last_label) const {
        const size_t len = m.path.size();
        std::vector<int> labels(len, 0);
        for (const auto &[state, from] : layer[len - 1]) {
            if (state.second != last_label || !path_vertex_ok(m, len - 1, last_label, state.first, 0))
                continue;
            labels[len - 1] = state.second;
            labels[len - 2] = state.first;
            int before = from; // label at index i - 2
            for (size_t i = len - 1; i >= 2; --i) {
                labels[i - 2] = before;
                before = layer[i - 1].at({labels[i - 2], labels[i - 1]});
            }
            return labels;
        }
        return {};
    }
};

int max_bound(const PathModel &m) { return m.bound.front(); }

} // namespace

std::vector<std::pair<int, int>> path_pair_frontier(const Graph &g, std::span<const char> outside,
                                                    std::span<const Vertex> path) {
    if (path.size() < 2)
        throw ContractError("path_pair_frontier: path needs two vertices");
    auto m = path_model(g, outside, path);
    FrontierSearch search(m);
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= max_bound(m); ++a) {
        search.run(a);
        for (int b : search.finals())
            out.emplace_back(a, b);
    }
    return out;
}

bool realize_path_pair(const Graph &g, std::span<const char> outside, std::span<const Vertex> path,
                       int first_label, int second_label, std::vector<int> &labels) {
    auto m = path_model(g, outside, path);
    if (first_label < 1 || first_label > max_bound(m))
        return false;
    FrontierSearch search(m);
    search.run(first_label);
    auto path_labels = search.trace(second_label);
    if (path_labels.empty())
        return false;
    const size_t len = path.size();
    for (size_t i = 0; i < len; ++i) {
        labels[static_cast<size_t>(path[i])] = path_labels[i];
        const int left = i > 0 ? path_labels[i - 1] : 0;
        const int right = i + 1 < len ? path_labels[i + 1] : 0;
        std::vector<int> need;
        for (int s = 1; s < path_labels[i]; ++s)
            if (s != left && s != right)
                need.push_back(s);
        auto given = cover_assignment(need, m.hanging_values[i]);
        for (size_t h = 0; h < m.hanging[i].size(); ++h) {
            auto dp = rooted_dp(g, m.hanging[i][h], outside, path[i]);
            assign_subtree(dp, m.hanging[i][h], std::max(1, given[h]), labels);
        }
    }
    return true;
}

int entry_value_exact(std::span<const int> other_values,
                      const std::vector<std::pair<int, int>> &frontier) {
    std::vector<int> helpers(other_values.begin(), other_values.end());
    int best = 0;
    for (auto [a, b] : frontier) {
        // Largest z such that {1..z} minus the endpoint labels is coverable.
        for (int z = best + 1; z <= static_cast<int>(helpers.size()) + 2; ++z) {
            std::vector<int> need;
            for (int s = 1; s <= z; ++s)
                if (s != a && s != b)
                    need.push_back(s);
            if (!coverable(need, helpers))
                break;
            best = z;
        }
    }
    return 1 + best;
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

namespace {

/// Top-down labeling that puts `root` at `target` using the ordering rooted
/// at `root`. Non-entry vertices follow the greedy chain of their children;
/// the entry picks an exact endpoint pair from the path frontier.
std::vector<int> build_witness(const Graph &g, const RootedUnicyclic &r, int target) {
    const auto &s = r.sigma;
    std::vector<int> labels(static_cast<size_t>(g.order()), 0);
    std::vector<std::pair<Vertex, int>> stack{{s.root, target}};
    while (!stack.empty()) {
        auto [v, label] = stack.back();
        stack.pop_back();
        labels[static_cast<size_t>(v)] = label;
        if (v != s.entry) {
            auto kids = s.children(g, v);
            std::vector<int> values;
            for (Vertex k : kids)
                values.push_back(r.rooted[static_cast<size_t>(k)]);
            Chain chain = greedy_chain(values, kids);
            std::vector<int> pos(kids.size(), 1);
            for (int t = 1; t <= label - 1; ++t)
                pos[static_cast<size_t>(chain.chosen[static_cast<size_t>(t - 1)])] = t;
            for (size_t c = 0; c < kids.size(); ++c)
                stack.emplace_back(kids[c], pos[c]);
            continue;
        }
        const auto &a = r.analysis;
        const auto &others = r.entry_other_children;
        std::vector<int> helpers;
        for (Vertex k : others)
            helpers.push_back(r.rooted[static_cast<size_t>(k)]);
        auto frontier = path_pair_frontier(g, a.outside, a.path);
        bool placed = false;
        for (auto [pa, pb] : frontier) {
            std::vector<int> need;
            for (int t = 1; t < label; ++t)
                if (t != pa && t != pb)
                    need.push_back(t);
            if (!coverable(need, helpers))
                continue;
            if (!realize_path_pair(g, a.outside, a.path, pa, pb, labels))
                continue;
            auto given = cover_assignment(need, helpers);
            for (size_t c = 0; c < others.size(); ++c)
                stack.emplace_back(others[c], std::max(1, given[c]));
            placed = true;
            break;
        }
        if (!placed)
            throw VerificationError("unicyclic witness: no endpoint pair supports the entry label");
    }
    return labels;
}

} // namespace

SolveResult transitivity_unicyclic(const Graph &g) {
    auto cert = recognize_unicyclic(g);
    if (!cert)
        throw ClassMismatchError("transitivity_unicyclic: graph is not unicyclic");
    int best = 0;
    Vertex best_root = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto r = rooted_transitive_numbers_uc(g, u, *cert);
        if (r.rooted[static_cast<size_t>(u)] > best) {
            best = r.rooted[static_cast<size_t>(u)];
            best_root = u;
        }
    }
    auto r = rooted_transitive_numbers_uc(g, best_root, *cert);
    auto labels = build_witness(g, r, best);
    SolveResult out{best, partition_from_labeling(labels)};
    auto kind = classify_partition(g, out.witness);
    if (!kind.transitive || out.witness.order() != best)
        throw VerificationError("unicyclic witness failed verification");
    return out;
}

} // namespace updom
