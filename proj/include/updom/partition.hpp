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

#include <string>
#include <string_view>
#include <vector>

namespace updom {

/// Ordered list of disjoint nonempty blocks. Block indices are 0-based in
/// the API; text and JSON output number blocks from 1.
struct VertexPartition {
    std::vector<std::vector<Vertex>> blocks;

    int order() const noexcept { return static_cast<int>(blocks.size()); }

    /// block_of[v] for every vertex; requires a partition of 0..n-1.
    std::vector<int> block_of(int n) const;

    /// Blocks from a per-vertex block index; indices must be 0..k-1 and each
    /// used at least once. Vertices inside a block are ascending.
    static VertexPartition from_labels(std::span<const int> label);

    /// Blocks sorted internally, then ordered by smallest member.
    VertexPartition canonical() const;

    friend bool operator==(const VertexPartition &, const VertexPartition &) = default;
};

/// Throws ContractError unless `p` is a partition of V(g) into nonempty blocks.
void validate(const Graph &g, const VertexPartition &p);

/// One block per line, vertices separated by whitespace, `#` comments.
/// Blank lines are skipped.
VertexPartition parse_partition(std::string_view text);
std::string to_text(const VertexPartition &p);

/// Every vertex of `b` has a neighbor in `a`. Throws ContractError when the
/// sets overlap or either is empty.
bool dominates(const Graph &g, std::span<const Vertex> a, std::span<const Vertex> b);

/// True when every vertex outside `s` has a neighbor in `s` (closed
/// neighborhoods).
bool is_dominating_set(const Graph &g, std::span<const Vertex> s);

class DominationDigraph {
  public:
    DominationDigraph() = default;
    explicit DominationDigraph(int k) : k_(k), rel_(static_cast<size_t>(k) * k, 0) {}

    int order() const noexcept { return k_; }
    /// Block i dominates block j. The diagonal is always false.
    bool edge(int i, int j) const { return rel_[static_cast<size_t>(i) * k_ + j] != 0; }
    void set_edge(int i, int j, bool value) { rel_[static_cast<size_t>(i) * k_ + j] = value; }

  private:
    int k_ = 0;
    std::vector<char> rel_;
};

DominationDigraph domination_digraph(const Graph &g, const VertexPartition &p);

struct PartitionKind {
    bool upper_domatic = false;
    bool transitive = false;
    bool domatic = false;
    bool grundy = false;
};

enum class Kind { UpperDomatic, Transitive, Domatic, Grundy };

std::string_view to_string(Kind k);
/// Accepts "upper-domatic", "transitive", "domatic", "grundy".
Kind parse_kind(std::string_view text);

PartitionKind classify_partition(const Graph &g, const VertexPartition &p);
bool has_kind(const PartitionKind &flags, Kind k);

bool is_upper_domatic(const DominationDigraph &dd);
/// Edge i -> j for all i < j.
bool is_transitive(const DominationDigraph &dd);

/// Blocks with out-degree k-1.
std::vector<int> sources(const DominationDigraph &dd);
/// Blocks with in-degree k-1.
std::vector<int> sinks(const DominationDigraph &dd);
std::vector<int> in_degrees(const DominationDigraph &dd);
std::vector<int> out_degrees(const DominationDigraph &dd);

/// Merge blocks i and j (i != j) into position min(i, j).
VertexPartition merge_blocks(const VertexPartition &p, int i, int j);

} // namespace updom
