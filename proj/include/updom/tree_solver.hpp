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

#include <span>
#include <vector>

namespace updom {

/// Largest z such that the sorted values contain a subsequence
/// v_1 <= ... <= v_z with v_q >= q. Empty input gives 0.
int z_value(std::span<const int> values);

/// The greedy subsequence realizing z_value. `chosen[q-1]` is the index
/// (into the input) placed at chain position q; `spare` holds the rest.
/// Ties: smaller value first, then smaller id.
struct Chain {
    int z = 0;
    std::vector<int> chosen;
    std::vector<int> spare;
};

Chain greedy_chain(std::span<const int> values, std::span<const Vertex> ids);

/// Rooted transitive numbers over one tree component.
///
/// The component is the one containing `root` after deleting `excluded`
/// vertices (mask, may be empty) and the single vertex `cut` (or -1).
/// `rooted[v]` = 1 + z_value(rooted values of v's children); only entries of
/// vertices in the component are meaningful.
struct RootedTreeDP {
    Vertex root = -1;
    std::vector<Vertex> parent;                 // -1 for the root and outsiders
    std::vector<std::vector<Vertex>> children;  // ascending ids
    std::vector<int> rooted;                    // 0 outside the component
    std::vector<Vertex> preorder;

    bool contains(Vertex v) const { return rooted[static_cast<size_t>(v)] > 0; }
    int value(Vertex v) const { return rooted[static_cast<size_t>(v)]; }
    std::vector<int> child_values(Vertex v) const;
};

/// Throws ContractError when the component contains a cycle.
RootedTreeDP rooted_dp(const Graph &g, Vertex root, std::span<const char> excluded = {},
                       Vertex cut = -1);

/// Requires g to be a tree; throws ClassMismatchError otherwise.
RootedTreeDP rooted_transitive_numbers(const Graph &tree, Vertex root);

/// Transitive number of x in the tree component containing it.
int transitive_number(const Graph &g, Vertex x, std::span<const char> excluded = {});

/// Block indices the child at `child_index` may occupy when its parent sits
/// at 1 + z, following the chain-shift rule of the tree lemma. Positions are
/// ascending and 1-based.
std::vector<int> allowed_positions(std::span<const int> child_values, const Chain &chain,
                                   int child_index);

/// The same set by direct matching: position i is allowed iff
/// i <= min(value, z) and the other children can cover {1..z} \ {i}.
std::vector<int> allowed_positions_exact(std::span<const int> child_values, int z, int child_index);

/// Convenience overload on a rooted DP: `child` must be a child of `x`.
std::vector<int> allowed_positions(const RootedTreeDP &dp, Vertex x, Vertex child);

/// Assigns `label` to v and labels its DP subtree so that v's requirement
/// holds without help from its parent. Needs 1 <= label <= dp.value(v).
/// Unused vertices receive block 1.
void assign_subtree(const RootedTreeDP &dp, Vertex v, int label, std::vector<int> &labels);

/// Tr(T) = D(T) with a transitive witness. Requires a forest; each component
/// is solved independently and the others are placed in block 1.
SolveResult transitivity_tree(const Graph &forest);

} // namespace updom
