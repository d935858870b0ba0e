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
#include "updom/partition.hpp"

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace updom {

/// A partition number together with a partition attaining it.
struct SolveResult {
    int value = 0;
    VertexPartition witness;
};

/// Exhaustive solvers need neighbor bitmasks.
constexpr int kOracleHardLimit = Graph::kMaskLimit;

/// Calls `fn` with every restricted-growth string of length n using exactly
/// k symbols, in lexicographic order. Stops when `fn` returns false.
void enumerate_partitions(int n, int k, const std::function<bool(std::span<const int>)> &fn);

std::uint64_t stirling2(int n, int k);

// ---------------------------------------------------------------------------
// Upper domatic and domatic partitions (unordered set partitions)
// ---------------------------------------------------------------------------

/// Some upper domatic partition of order exactly k exists. On success
/// `witness` receives the one whose restricted-growth string is least.
bool upper_domatic_feasible(const Graph &g, int k, VertexPartition *witness = nullptr);

/// Visits every upper domatic partition of order k once, blocks numbered in
/// order of first appearance. Stops when `fn` returns false.
void for_each_upper_domatic_partition(const Graph &g, int k,
                                      const std::function<bool(const VertexPartition &)> &fn);

bool domatic_feasible(const Graph &g, int k, VertexPartition *witness = nullptr);

SolveResult upper_domatic_bf(const Graph &g);
SolveResult domatic_bf(const Graph &g);

/// All D-partitions; `d_value` may pass a known D(G) to skip recomputation.
std::vector<VertexPartition> all_D_partitions(const Graph &g, int d_value = 0);
void for_each_D_partition(const Graph &g, const std::function<bool(const VertexPartition &)> &fn,
                          int d_value = 0);

std::optional<VertexPartition> exists_sink_D_partition(const Graph &g, int d_value = 0);
std::optional<VertexPartition> exists_source_D_partition(const Graph &g, int d_value = 0);

// ---------------------------------------------------------------------------
// Transitive and Grundy partitions (ordered, searched as vertex labelings)
// ---------------------------------------------------------------------------

/// Labeling f: V -> {1..} in which every vertex v has neighbors carrying
/// each label 1..f(v)-1. With `grundy`, adjacent vertices differ too.
struct LabelingQuery {
    std::vector<std::pair<Vertex, int>> fixed; // (vertex, label >= 1)
    int max_label = 0;                         // 0: no cap beyond degree bounds
    bool grundy = false;
};

/// Returns a labeling (index = vertex, values 1-based) or nullopt.
std::optional<std::vector<int>> find_labeling(const Graph &g, const LabelingQuery &query);

/// Blocks V_1..V_k from a 1-based labeling with max label k.
VertexPartition partition_from_labeling(std::span<const int> labeling);

SolveResult transitivity_bf(const Graph &g);
SolveResult grundy_bf(const Graph &g);

/// Largest block index v can occupy over all transitive partitions.
int transitive_number_bf(const Graph &g, Vertex v);

/// Largest index i such that some transitive partition puts `q` in block
/// `q_label` and `p` in block i; 0 when none exists.
int constrained_position_max(const Graph &g, Vertex p, Vertex q, int q_label);

/// Some transitive partition puts `p` in block `p_label` and `q` in block
/// `q_label`.
bool pair_achievable(const Graph &g, Vertex p, int p_label, Vertex q, int q_label);

/// All achievable (label of p, label of q) pairs, ascending.
std::vector<std::pair<int, int>> achievable_pairs(const Graph &g, Vertex p, Vertex q);

} // namespace updom
