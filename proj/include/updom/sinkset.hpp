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

#pragma once

#include "updom/graph.hpp"
#include "updom/oracle.hpp"
#include "updom/partition.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace updom {

/// Block j has in-degree k-3 and X = V_j ∩ N(V_a) ∩ N(V_b) is nonempty,
/// where a < b are the two blocks that fail to dominate V_j.
///
/// Returns pi with V_j replaced by X and the remainder of V_j merged into
/// V_a when V_a dominates V_b, otherwise into V_b. X is a sink of the result.
/// The input is assumed maximum; only the upper domatic property is checked.
/// Throws ContractError on a failed precondition and VerificationError when
/// the output does not verify.
VertexPartition sink_from_km3(const Graph &g, const VertexPartition &pi, int j);

/// Block j has in-degree k-2. Returns pi when it already has a sink, else
/// the first sink-bearing upper domatic partition of order k found by
/// exhaustive search. Throws VerificationError when none exists.
VertexPartition km2_sink(const Graph &g, const VertexPartition &pi, int j);

/// Block indices in the reference orientation where every block dominates
/// exactly two others: V1 -> {V4, V5}, V2 -> {V1, V3}, V3 -> {V1, V4},
/// V4 -> {V2, V5}, V5 -> {V2, V3} (0-based below).
inline constexpr std::array<std::array<int, 2>, 5> kFiveCycleDominates{{
    {3, 4}, {0, 2}, {0, 3}, {1, 4}, {1, 2}}};

/// Selected vertices and the normalized partition for the five-block case.
/// Index 0 of `blocks` is the minimum-cardinality block; vertices are -1
/// when not selected.
struct Case5Certificate {
    VertexPartition blocks;              // normalized V1..V5
    std::array<int, 5> original_index{}; // normalized block -> input block
    /// split[j][0], split[j][1]: parts of V_j touching its two dominated
    /// blocks in kFiveCycleDominates order; split[j][2]: the rest.
    std::array<std::array<std::vector<Vertex>, 3>, 5> split;
    Vertex y1 = -1, y1p = -1, y2 = -1, y2p = -1, y3 = -1, y3p = -1;
    Vertex y4 = -1, y4p = -1, y5 = -1, y5p = -1, y2pp = -1, y4pp = -1;
    std::string subcase; // "5.1", "5.2", "5.3", "5.4", "5.4/y1y1'", ...
};

enum class D5Status { Sink, Unresolved, ConstructionFailed };
std::string_view to_string(D5Status s);

struct D5Result {
    D5Status status = D5Status::Unresolved;
    VertexPartition partition; // verified transitive order-5 partition on Sink
    Case5Certificate certificate;
    std::string diagnostic;
};

/// Five-block case analysis. Requires pi upper domatic of order 5, D(G) = 5,
/// every block of in-degree 2 and every V_j ∩ N(V_a) ∩ N(V_b) empty; throws
/// ContractError otherwise. The emitted partition is always re-verified; a
/// failed check is reported as ConstructionFailed with a diagnostic.
D5Result d5_case_analysis(const Graph &g, const VertexPartition &pi);

struct D6Report {
    VertexPartition witness;  // first D-partition with a block of in-degree >= 3
    long partitions = 0;      // D-partitions examined
    long without_indegree3 = 0;
};

/// Requires D(G) = 6 (ContractError otherwise). Throws VerificationError when
/// no D-partition has a block of in-degree >= 3.
D6Report d6_indegree3_check(const Graph &g);

/// How a sink-bearing D-partition was obtained.
struct SinkRoute {
    std::optional<VertexPartition> partition;
    std::string route; // "direct", "indegree-k-2", "indegree-k-3", "case-5.x", "search", "none"
    std::optional<D5Result> case5;
};

/// Walks the case structure on the first D-partition: an existing sink,
/// a block of in-degree k-2, the merge construction, or the five-block case
/// analysis. Falls back to exhaustive search when no construction applies.
SinkRoute find_sink_partition(const Graph &g, int d_value = 0);

struct HuntOptions {
    int size_cap = 11; // graphs above this order are skipped
    bool evidence = true;
};

struct HuntRecord {
    std::string graph; // edge list
    int n = 0;
    int m = 0;
    int upper_domatic = 0;
    bool sink_exists = false;
    std::optional<VertexPartition> witness;
    double elapsed = 0.0; // seconds
    /// "ok", "COUNTEREXAMPLE", "VIOLATION" (D <= 4 without sink) or "SKIPPED".
    std::string flag = "ok";
    /// All D-partitions with their digraph rows, only for flagged graphs.
    std::vector<std::pair<VertexPartition, DominationDigraph>> evidence;
};

HuntRecord hunt_one(const Graph &g, const HuntOptions &options = {});

/// Runs hunt_one over the stream on `workers` threads. Records come back in
/// stream order regardless of scheduling.
std::vector<HuntRecord> conjecture_hunt(const std::vector<Graph> &stream, int workers = 1,
                                        const HuntOptions &options = {});

/// One JSON object per line.
std::string to_jsonl(const HuntRecord &record);

} // namespace updom
