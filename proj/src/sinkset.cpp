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

#include "updom/sinkset.hpp"

#include "updom/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

namespace updom {

namespace {

bool has_neighbor_in(const Graph &g, Vertex v, const std::vector<Vertex> &set) {
    for (Vertex w : set)
        if (g.adjacent(v, w))
            return true;
    return false;
}

int neighbors_in(const Graph &g, Vertex v, const std::vector<Vertex> &set) {
    int count = 0;
    for (Vertex w : set)
        count += g.adjacent(v, w) ? 1 : 0;
    return count;
}

/// The two blocks that fail to dominate block j, ascending.
std::vector<int> non_dominators(const DominationDigraph &dd, int j) {
    std::vector<int> out;
    for (int a = 0; a < dd.order(); ++a)
        if (a != j && !dd.edge(a, j))
            out.push_back(a);
    return out;
}

std::vector<Vertex> common_part(const Graph &g, const VertexPartition &pi, int j, int a, int b) {
    std::vector<Vertex> out;
    for (Vertex v : pi.blocks[static_cast<size_t>(j)])
        if (has_neighbor_in(g, v, pi.blocks[static_cast<size_t>(a)]) &&
            has_neighbor_in(g, v, pi.blocks[static_cast<size_t>(b)]))
            out.push_back(v);
    return out;
}

DominationDigraph checked_digraph(const Graph &g, const VertexPartition &pi, const char *who) {
    validate(g, pi);
    auto dd = domination_digraph(g, pi);
    if (!is_upper_domatic(dd))
        throw ContractError(std::string(who) + ": partition is not upper domatic");
    return dd;
}

} // namespace

// ---------------------------------------------------------------------------
// Merge construction and in-degree k-2 search
// ---------------------------------------------------------------------------

VertexPartition sink_from_km3(const Graph &g, const VertexPartition &pi, int j) {
    const auto dd = checked_digraph(g, pi, "sink_from_km3");
    const int k = pi.order();
    if (j < 0 || j >= k)
        throw ContractError("sink_from_km3: block index out of range");
    const auto others = non_dominators(dd, j);
    if (k < 3 || others.size() != 2)
        throw ContractError("sink_from_km3: block is not dominated by exactly k-3 blocks");
    const int a = others[0], b = others[1];
    auto x = common_part(g, pi, j, a, b);
    if (x.empty())
        throw ContractError("sink_from_km3: V_j meets no common neighborhood of its two dominated blocks");
    std::vector<Vertex> rest;
    for (Vertex v : pi.blocks[static_cast<size_t>(j)])
        if (!std::binary_search(x.begin(), x.end(), v))
            rest.push_back(v);
    VertexPartition out = pi;
    out.blocks[static_cast<size_t>(j)] = x;
    if (!rest.empty()) {
        const int into = dd.edge(a, b) ? a : b;
        auto &target = out.blocks[static_cast<size_t>(into)];
        target.insert(target.end(), rest.begin(), rest.end());
        std::sort(target.begin(), target.end());
    }
    const auto after = domination_digraph(g, out);
    const auto sink_list = sinks(after);
    if (!is_upper_domatic(after) || out.order() != k ||
        std::find(sink_list.begin(), sink_list.end(), j) == sink_list.end())
        throw VerificationError("sink_from_km3: merged partition does not have X as a sink");
    return out;
}

VertexPartition km2_sink(const Graph &g, const VertexPartition &pi, int j) {
    const auto dd = checked_digraph(g, pi, "km2_sink");
    const int k = pi.order();
    if (j < 0 || j >= k)
        throw ContractError("km2_sink: block index out of range");
    if (in_degrees(dd)[static_cast<size_t>(j)] != k - 2)
        throw ContractError("km2_sink: block is not dominated by exactly k-2 blocks");
    if (!sinks(dd).empty())
        return pi;
    auto found = exists_sink_D_partition(g, k);
    if (!found)
        throw VerificationError("km2_sink: no sink-bearing partition of order k exists; this "
                                "contradicts the in-degree k-2 proposition");
    return *found;
}

// ---------------------------------------------------------------------------
// Five-block case analysis
// ---------------------------------------------------------------------------

std::string_view to_string(D5Status s) {
    switch (s) {
    case D5Status::Sink: return "sink";
    case D5Status::Unresolved: return "unresolved";
    case D5Status::ConstructionFailed: return "construction-failed";
    }
    return "?";
}

namespace {

/// Relabeling of the blocks onto kFiveCycleDominates with normalized block 0
/// mapped to `first`; empty when the digraph has another shape.
std::optional<std::array<int, 5>> normalize_five(const DominationDigraph &dd, int first) {
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    do {
        if (perm[0] != first)
            continue;
        bool ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = 0; b < 5 && ok; ++b) {
                if (a == b)
                    continue;
                const bool want = kFiveCycleDominates[static_cast<size_t>(a)][0] == b ||
                                  kFiveCycleDominates[static_cast<size_t>(a)][1] == b;
                ok = dd.edge(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]) == want;
            }
        if (ok)
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/// Lowest vertex of `from` adjacent to `anchor`, or -1.
Vertex lowest_neighbor(const Graph &g, const std::vector<Vertex> &from, Vertex anchor) {
    for (Vertex v : from)
        if (g.adjacent(v, anchor))
            return v;
    return -1;
}

/// Picks (y, y') in `from` adjacent to `first` and `second`, preferring one
/// vertex adjacent to both.
std::pair<Vertex, Vertex> pick_pair(const Graph &g, const std::vector<Vertex> &from, Vertex first,
                                    Vertex second) {
    for (Vertex v : from)
        if (g.adjacent(v, first) && g.adjacent(v, second))
            return {v, v};
    return {lowest_neighbor(g, from, first), lowest_neighbor(g, from, second)};
}

std::string describe_failure(const Graph &g, const VertexPartition &w) {
    std::string why;
    const int k = w.order();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!dominates(g, w.blocks[static_cast<size_t>(a)], w.blocks[static_cast<size_t>(b)]))
                why += " W" + std::to_string(a + 1) + " does not dominate W" + std::to_string(b + 1) + ";";
    return why;
}

} // namespace

D5Result d5_case_analysis(const Graph &g, const VertexPartition &pi) {
    const auto dd = checked_digraph(g, pi, "d5_case_analysis");
    if (pi.order() != 5)
        throw ContractError("d5_case_analysis: partition order is not 5");
    for (int deg : in_degrees(dd))
        if (deg != 2)
            throw ContractError("d5_case_analysis: some block is not dominated by exactly two blocks");
    for (int j = 0; j < 5; ++j) {
        auto others = non_dominators(dd, j);
        if (!common_part(g, pi, j, others[0], others[1]).empty())
            throw ContractError("d5_case_analysis: merge construction applies to block " + std::to_string(j + 1));
    }
    if (upper_domatic_feasible(g, 6))
        throw ContractError("d5_case_analysis: upper domatic number exceeds 5");

    D5Result result;
    auto &c = result.certificate;
    int smallest = 0;
    for (int j = 1; j < 5; ++j)
        if (pi.blocks[static_cast<size_t>(j)].size() < pi.blocks[static_cast<size_t>(smallest)].size())
            smallest = j;
    auto perm = normalize_five(dd, smallest);
    if (!perm)
        throw ContractError("d5_case_analysis: digraph does not match the five-block orientation");
    c.original_index = *perm;
    for (int j = 0; j < 5; ++j)
        c.blocks.blocks.push_back(pi.blocks[static_cast<size_t>((*perm)[static_cast<size_t>(j)])]);
    const auto &V = c.blocks.blocks;
    for (size_t j = 0; j < 5; ++j) {
        const auto [a, b] = kFiveCycleDominates[j];
        for (Vertex v : V[j]) {
            const bool to_a = has_neighbor_in(g, v, V[static_cast<size_t>(a)]);
            const bool to_b = has_neighbor_in(g, v, V[static_cast<size_t>(b)]);
            c.split[j][to_a ? 0 : (to_b ? 1 : 2)].push_back(v);
        }
    }
    auto fail = [&](std::string why) {
        result.status = D5Status::ConstructionFailed;
        result.diagnostic = std::move(why);
        return result;
    };
    // V1 dominates V4 (part 0) and V5 (part 1); V2 and V3 dominate V1 (part 0).
    auto pick_spread = [&](const std::vector<Vertex> &from, const std::vector<Vertex> &into, Vertex &y,
                           Vertex &u, Vertex &w) {
        for (Vertex v : from)
            if (neighbors_in(g, v, into) >= 2) {
                y = v;
                for (Vertex t : into) {
                    if (!g.adjacent(v, t))
                        continue;
                    if (u < 0)
                        u = t;
                    else if (w < 0)
                        w = t;
                }
                return true;
            }
        return false;
    };
    if (!pick_spread(c.split[0][0], V[3], c.y1, c.y4, c.y4p))
        return fail("no vertex of V1 touching V4 has two neighbors in V4");
    if (!pick_spread(c.split[0][1], V[4], c.y1p, c.y5, c.y5p))
        return fail("no vertex of V1 touching V5 has two neighbors in V5");
    std::tie(c.y2, c.y2p) = pick_pair(g, c.split[1][0], c.y1, c.y1p);
    std::tie(c.y3, c.y3p) = pick_pair(g, c.split[2][0], c.y1, c.y1p);
    if (c.y2 < 0 || c.y2p < 0 || c.y3 < 0 || c.y3p < 0)
        return fail("V2 or V3 lacks a neighbor of y1 or y1'");

    const auto &v2_to_v3 = c.split[1][1];
    auto with_y4 = [&](std::vector<Vertex> w2) {
        w2.push_back(c.y4pp);
        if (c.y4pp != c.y4 && c.y4pp != c.y4p)
            w2.push_back(c.y4);
        return w2;
    };
    std::vector<std::vector<Vertex>> w; // W2..W5
    const bool same2 = c.y2 == c.y2p;
    const bool same3 = c.y3 == c.y3p;
    auto subcase_two = [&]() {
        c.y4pp = lowest_neighbor(g, V[3], c.y2);
        c.y2pp = lowest_neighbor(g, v2_to_v3, c.y3);
        if (c.y4pp < 0 || c.y2pp < 0)
            return false;
        w = {with_y4({c.y2pp}), {c.y1p, c.y3}, {c.y2}, {c.y1}};
        return true;
    };
    if (same2 && same3) {
        c.subcase = "5.1";
        c.y2pp = lowest_neighbor(g, v2_to_v3, c.y3);
        c.y4pp = c.y2pp < 0 ? -1 : lowest_neighbor(g, V[3], c.y2pp);
        if (c.y2pp < 0 || c.y4pp < 0)
            return fail("subcase 5.1: y2'' or y4'' missing");
        w = {with_y4({c.y1p}), {c.y2, c.y2pp}, {c.y3}, {c.y1}};
    } else if (same2) {
        c.subcase = "5.2";
        if (!subcase_two())
            return fail("subcase 5.2: y2'' or y4'' missing");
    } else if (same3) {
        c.subcase = "5.3";
        c.y4pp = lowest_neighbor(g, V[3], c.y2);
        c.y2pp = lowest_neighbor(g, v2_to_v3, c.y3);
        if (c.y4pp < 0 || c.y2pp < 0)
            return fail("subcase 5.3: y2'' or y4'' missing");
        w = {with_y4({c.y2p, c.y2pp}), {c.y2, c.y1p}, {c.y3}, {c.y1}};
    } else {
        c.subcase = "5.4";
        if (!is_2k2_free(g)) {
            result.status = D5Status::Unresolved;
            result.diagnostic = "subcase 5.4 on a graph with an induced 2K2";
            return result;
        }
        if (g.adjacent(c.y1, c.y1p)) {
            c.subcase = "5.4/y1y1'";
            w = {V[1], {c.y3, c.y3p}, {c.y1p}, {c.y1}};
        } else if (g.adjacent(c.y1, c.y2p) || g.adjacent(c.y1p, c.y2)) {
            c.subcase = "5.4/cross";
            if (g.adjacent(c.y1, c.y2p))
                c.y2 = c.y2p;
            else
                c.y2p = c.y2;
            if (!subcase_two())
                return fail("subcase 5.4 cross edge: y2'' or y4'' missing");
        } else if (g.adjacent(c.y2, c.y2p)) {
            c.subcase = "5.4/y2y2'";
            c.y2pp = lowest_neighbor(g, v2_to_v3, c.y3);
            c.y4pp = lowest_neighbor(g, V[3], c.y2);
            if (c.y2pp < 0 || c.y4pp < 0)
                return fail("subcase 5.4 y2y2' edge: y2'' or y4'' missing");
            w = {with_y4({c.y1p, c.y2pp}), {c.y3, c.y2p}, {c.y2}, {c.y1}};
        } else {
            return fail("subcase 5.4: none of the four edges is present although the graph is 2K2-free");
        }
    }

    // W1 takes every vertex not placed in W2..W5.
    std::vector<int> label(static_cast<size_t>(g.order()), 0);
    for (size_t i = 0; i < w.size(); ++i)
        for (Vertex v : w[i]) {
            if (label[static_cast<size_t>(v)] != 0 && label[static_cast<size_t>(v)] != static_cast<int>(i) + 2)
                return fail("subcase " + c.subcase + ": a vertex is placed in two blocks");
            label[static_cast<size_t>(v)] = static_cast<int>(i) + 2;
        }
    for (auto &l : label)
        if (l == 0)
            l = 1;
    std::vector<int> zero_based(label);
    for (auto &l : zero_based)
        --l;
    std::set<int> used(zero_based.begin(), zero_based.end());
    if (used.size() != 5)
        return fail("subcase " + c.subcase + ": a block is empty");
    auto psi = VertexPartition::from_labels(zero_based);
    if (!classify_partition(g, psi).transitive)
        return fail("subcase " + c.subcase + ":" + describe_failure(g, psi));
    result.status = D5Status::Sink;
    result.partition = std::move(psi);
    return result;
}

// ---------------------------------------------------------------------------
// Six blocks
// ---------------------------------------------------------------------------

D6Report d6_indegree3_check(const Graph &g) {
    const int d = upper_domatic_bf(g).value;
    if (d != 6)
        throw ContractError("d6_indegree3_check: upper domatic number is " + std::to_string(d) + ", not 6");
    D6Report report;
    bool found = false;
    for_each_D_partition(
        g,
        [&](const VertexPartition &p) {
            ++report.partitions;
            auto deg = in_degrees(domination_digraph(g, p));
            if (*std::max_element(deg.begin(), deg.end()) >= 3) {
                if (!found)
                    report.witness = p;
                found = true;
            } else {
                ++report.without_indegree3;
            }
            return true;
        },
        6);
    if (!found)
        throw VerificationError("d6_indegree3_check: no D-partition has a block dominated by three blocks");
    return report;
}

// ---------------------------------------------------------------------------
// Routing and hunting
// ---------------------------------------------------------------------------

SinkRoute find_sink_partition(const Graph &g, int d_value) {
    SinkRoute out;
    VertexPartition pi;
    const int d = d_value > 0 ? d_value : upper_domatic_bf(g).value;
    if (!upper_domatic_feasible(g, d, &pi))
        throw ContractError("find_sink_partition: no upper domatic partition of the given order");
    const auto dd = domination_digraph(g, pi);
    const auto deg = in_degrees(dd);
    if (!sinks(dd).empty()) {
        out.partition = pi;
        out.route = "direct";
        return out;
    }
    for (int j = 0; j < d; ++j)
        if (deg[static_cast<size_t>(j)] == d - 2) {
            out.partition = km2_sink(g, pi, j);
            out.route = "indegree-k-2";
            return out;
        }
    for (int j = 0; j < d; ++j) {
        if (deg[static_cast<size_t>(j)] != d - 3)
            continue;
        auto others = non_dominators(dd, j);
        if (!common_part(g, pi, j, others[0], others[1]).empty()) {
            out.partition = sink_from_km3(g, pi, j);
            out.route = "indegree-k-3";
            return out;
        }
    }
    if (d == 5 && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) {
        out.case5 = d5_case_analysis(g, pi);
        if (out.case5->status == D5Status::Sink) {
            out.partition = out.case5->partition;
            out.route = "case-" + out.case5->certificate.subcase;
            return out;
        }
    }
    out.partition = exists_sink_D_partition(g, d);
    out.route = out.partition ? "search" : "none";
    return out;
}

HuntRecord hunt_one(const Graph &g, const HuntOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    HuntRecord rec;
    rec.graph = to_edge_list(g);
    rec.n = g.order();
    rec.m = g.size();
    if (g.order() > options.size_cap || g.order() > kOracleHardLimit) {
        rec.flag = "SKIPPED";
        return rec;
    }
    rec.upper_domatic = upper_domatic_bf(g).value;
    rec.witness = exists_sink_D_partition(g, rec.upper_domatic);
    rec.sink_exists = rec.witness.has_value();
    if (!rec.sink_exists) {
        rec.flag = rec.upper_domatic >= 5 ? "COUNTEREXAMPLE" : "VIOLATION";
        if (options.evidence)
            for (const auto &p : all_D_partitions(g, rec.upper_domatic))
                rec.evidence.emplace_back(p, domination_digraph(g, p));
    }
    rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<HuntRecord> conjecture_hunt(const std::vector<Graph> &stream, int workers,
                                        const HuntOptions &options) {
    std::vector<HuntRecord> out(stream.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < stream.size(); i = next++)
            out[i] = hunt_one(stream[i], options);
    };
    const int threads = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();
    return out;
}

namespace {

nlohmann::json blocks_json(const VertexPartition &p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto &b : p.blocks)
        blocks.push_back(b);
    return blocks;
}

} // namespace

std::string to_jsonl(const HuntRecord &rec) {
    nlohmann::json j;
    j["graph"] = rec.graph;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["D"] = rec.upper_domatic;
    j["sink_exists"] = rec.sink_exists;
    j["witness"] = rec.witness ? blocks_json(*rec.witness) : nlohmann::json(nullptr);
    j["elapsed"] = rec.elapsed;
    j["flag"] = rec.flag;
    if (!rec.evidence.empty()) {
        nlohmann::json ev = nlohmann::json::array();
        for (const auto &[p, dd] : rec.evidence) {
            nlohmann::json rows = nlohmann::json::array();
            for (int a = 0; a < dd.order(); ++a) {
                std::string row;
                for (int b = 0; b < dd.order(); ++b)
                    row += dd.edge(a, b) ? '1' : '0';
                rows.push_back(row);
            }
            ev.push_back({{"partition", blocks_json(p)}, {"digraph", rows}});
        }
        j["evidence"] = ev;
    }
    return j.dump();
}

} // namespace updom
