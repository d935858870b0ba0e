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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace updom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free. For n <= 64 every vertex
/// also carries a neighbor bitmask, which the exhaustive searches rely on.
class Graph {
  public:
    static constexpr int kMaskLimit = 64;

    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Parallel edges collapse; self-loops
    /// and out-of-range endpoints throw ContractError.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    int max_degree() const noexcept;
    int min_degree() const noexcept;

    bool has_masks() const noexcept { return !masks_.empty() || order() == 0; }
    /// Neighbor bitmask; only valid when order() <= kMaskLimit.
    std::uint64_t mask(Vertex v) const { return masks_[static_cast<size_t>(v)]; }

    std::vector<Edge> edges() const;

    /// Induced subgraph on `keep` (in the given order). `keep[i]` becomes
    /// vertex i of the result.
    Graph induced(std::span<const Vertex> keep) const;

    /// Optional external names, one per vertex; empty when none were given.
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(Vertex v) const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

  private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::string> labels_;
    int m_ = 0;
};

Graph complement(const Graph &g);

bool is_connected(const Graph &g);

/// Connected components, each sorted ascending; components ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph &g);

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// Edge-list text: optional `n <count>` header, one `u v` pair per line,
/// `#` starts a comment. Without a header n = 1 + largest label.
Graph parse_edge_list(std::string_view text);

/// DIMACS `p edge n m` with 1-indexed `e u v` lines; `c` lines are comments.
/// The declared m must equal the number of distinct edges.
Graph parse_dimacs(std::string_view text);

/// Guesses the format from the first meaningful line.
Graph parse_graph_auto(std::string_view text);

/// Writes `n <count>` followed by one `u v` line per edge (u < v).
std::string to_edge_list(const Graph &g);

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

/// Clique K and independent set S with |K| = omega(G).
struct SplitCertificate {
    std::vector<Vertex> independent;
    std::vector<Vertex> clique;
    int omega = 0;
};

/// The unique cycle in walk order.
struct UnicyclicCertificate {
    std::vector<Vertex> cycle;
};

/// Chain orderings of the two sides of a bipartite graph; neighborhoods are
/// nested decreasing along each ordering.
struct ChainCertificate {
    std::vector<Vertex> x_order;
    std::vector<Vertex> y_order;
};

/// Two sides (X, Y); for a co-bipartite graph both are cliques.
struct Bipartition {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};

enum class GraphClass {
    Tree,
    Unicyclic,
    Split,
    BipartiteChain,
    CoBipartite,
    CoBipartiteChain,
    TwoK2Free,
    General,
};

std::string_view to_string(GraphClass c);

struct Classification {
    std::vector<GraphClass> tags;
    std::optional<SplitCertificate> split;
    std::optional<UnicyclicCertificate> unicyclic;
    std::optional<ChainCertificate> chain;     // for BipartiteChain
    std::optional<Bipartition> cobipartite;    // cliques X, Y
    std::optional<ChainCertificate> cochain;   // chain orderings of the complement

    bool has(GraphClass c) const;
};

Classification classify(const Graph &g);

std::optional<SplitCertificate> recognize_split(const Graph &g);
std::optional<UnicyclicCertificate> recognize_unicyclic(const Graph &g);
bool is_tree(const Graph &g);
/// Two-coloring when g is bipartite; isolated vertices go to side X.
std::optional<Bipartition> bipartition(const Graph &g);
std::optional<ChainCertificate> recognize_bipartite_chain(const Graph &g);
bool is_2k2_free(const Graph &g);

/// Throws VerificationError when the certificate does not hold for g.
void verify(const Graph &g, const SplitCertificate &cert);

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,n-1}: vertex 0 is the center.
Graph star_graph(int n);
Graph empty_graph(int n);

Graph random_tree(int n, std::uint64_t seed);
Graph random_unicyclic(int n, std::uint64_t seed);
Graph random_split(int n, std::uint64_t seed);
Graph random_bipartite_chain(int n1, int n2, std::uint64_t seed);
/// G(n, p) with the given edge probability.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Calls `fn` on every labeled graph on n vertices (2^(n choose 2) of them).
/// Stops early when `fn` returns false. Requires n <= 8.
void for_each_labeled_graph(int n, const std::function<bool(const Graph &)> &fn);

/// One representative per isomorphism class on n vertices, n <= 8, in a
/// deterministic order. Results are cached per n.
const std::vector<Graph> &nonisomorphic_graphs(int n);

/// Canonical code of the upper triangle of the adjacency matrix, invariant
/// under relabeling. Requires n <= 11.
std::uint64_t canonical_code(const Graph &g);

/// Inverse of canonical_code for a known order.
Graph graph_from_code(int n, std::uint64_t code);

} // namespace updom
