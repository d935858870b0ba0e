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
#include <utility>
#include <vector>

namespace updom {

/// Cycle-aware breadth-first leveling rooted at `root`.
///
/// The cycle vertex nearest the root (`entry`) sits alone at `entry_level`;
/// every other cycle vertex sits at entry_level + 1. `order` lists vertices
/// from the deepest level up and ends with the root.
struct SigmaOrdering {
    Vertex root = -1;
    Vertex entry = -1;
    int entry_level = 0;
    std::vector<int> level;
    std::vector<Vertex> order;
    /// The cycle walked from `entry` toward its lower-id cycle neighbor.
    std::vector<Vertex> cycle;

    /// Neighbors one level deeper; for the entry this includes both cycle
    /// neighbors.
    std::vector<Vertex> children(const Graph &g, Vertex v) const;
};

SigmaOrdering sigma_ordering(const Graph &g, Vertex root);
SigmaOrdering sigma_ordering(const Graph &g, Vertex root, const UnicyclicCertificate &cert);

/// Vertex set (ascending) of the component of x among x and deeper vertices.
std::vector<Vertex> rooted_subgraph(const Graph &g, const SigmaOrdering &sigma, Vertex x);

/// Data about the tree T formed by the entry's rooted subgraph minus the
/// entry, and the path joining the entry's two cycle neighbors inside it.
struct PathAnalysis {
    std::vector<Vertex> path;  // path.front() = first endpoint, path.back() = second
    std::vector<char> outside; // mask of vertices not in T
    int first_value = 0;       // transitive number of the first endpoint in T
    int second_value = 0;
    /// Consecutive path prefixes needed to reach those values.
    std::vector<Vertex> first_needs;
    std::vector<Vertex> second_needs;
    /// Block indices each element of the prefix may occupy when its endpoint
    /// reaches its value; parallel to first_needs / second_needs.
    std::vector<std::vector<int>> first_positions;
    std::vector<std::vector<int>> second_positions;
    /// Endpoint values in T with the adjacent path vertex deleted.
    int first_cut_value = 0;
    int second_cut_value = 0;
    /// Largest position of one endpoint while the other keeps its value;
    /// 0 when that endpoint is not in the other's prefix.
    int first_constrained_max = 0;
    int second_constrained_max = 0;

    Vertex first() const { return path.front(); }
    Vertex second() const { return path.back(); }
    std::vector<Vertex> common() const;
};

PathAnalysis compute_XY(const Graph &g, std::span<const char> outside, std::span<const Vertex> path);

/// Positions of w under the partition fixing the first (or second) endpoint.
std::vector<int> prefix_positions(const PathAnalysis &a, Vertex w, bool first_side);

/// w lies in both prefixes and its two position sets intersect.
/// Throws ContractError when w is not in both prefixes.
bool agrees(const PathAnalysis &a, Vertex w);

enum class PathCase {
    Disjoint,      // prefixes do not meet
    AllAgree,      // every common vertex agrees
    NeitherInside, // some common vertex disagrees; neither endpoint in the other prefix
    FirstInside,   // first endpoint lies in the second prefix only
    SecondInside,  // second endpoint lies in the first prefix only
    BothInside,
};

std::string_view to_string(PathCase c);

struct LSequenceCandidates {
    PathCase which = PathCase::Disjoint;
    std::vector<std::pair<int, int>> pairs; // (first endpoint value, second endpoint value)
    std::vector<std::vector<int>> sequences; // sorted; none contained in another
};

/// Candidate maximal L-sequences for the entry: `other_values` are the
/// rooted numbers of its non-cycle children.
LSequenceCandidates maximal_l_sequences(std::span<const int> other_values, const PathAnalysis &a);

/// One sorted L-sequence per candidate; for vertices other than the entry
/// there is exactly one. Throws ContractError for a vertex without children.
std::vector<std::vector<int>> maximal_l_sequences(const Graph &g, const SigmaOrdering &sigma,
                                                  std::span<const int> rooted, Vertex c);

/// Everything computed for one root.
struct RootedUnicyclic {
    SigmaOrdering sigma;
    std::vector<int> rooted; // rooted transitive number of every vertex
    PathAnalysis analysis;
    LSequenceCandidates candidates;
    std::vector<Vertex> entry_other_children;
};

RootedUnicyclic rooted_transitive_numbers_uc(const Graph &g, Vertex root);
RootedUnicyclic rooted_transitive_numbers_uc(const Graph &g, Vertex root,
                                             const UnicyclicCertificate &cert);

/// t(root, G) computed through the ordering rooted at `root`.
int rooted_transitive_number_uc(const Graph &g, Vertex root);

/// Tr(G), which equals D(G) on unicyclic graphs, with a transitive witness.
SolveResult transitivity_unicyclic(const Graph &g);

// ---------------------------------------------------------------------------
// Exact path frontier
// ---------------------------------------------------------------------------

/// Every (label of path.front(), label of path.back()) pair realized by some
/// transitive labeling of the tree T. Computed by dynamic programming over
/// consecutive path labels.
std::vector<std::pair<int, int>> path_pair_frontier(const Graph &g, std::span<const char> outside,
                                                    std::span<const Vertex> path);

/// A labeling of T (entries outside T untouched) realizing the pair, or
/// false when the pair is not achievable.
bool realize_path_pair(const Graph &g, std::span<const char> outside, std::span<const Vertex> path,
                       int first_label, int second_label, std::vector<int> &labels);

/// Entry value computed from the exact frontier; used to cross-check the
/// candidate route.
int entry_value_exact(std::span<const int> other_values,
                      const std::vector<std::pair<int, int>> &frontier);

} // namespace updom
