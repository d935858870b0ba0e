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

namespace updom {

/// True when the complement of g is bipartite; `sides` receives the two
/// cliques covering V.
bool is_cobipartite(const Graph &g, Bipartition *sides = nullptr);

/// An upper domatic partition of the same order as `pi` that has a source
/// block.
///
/// A block meeting both cliques is already a source and `pi` is returned
/// unchanged. Otherwise the lowest-index block with two or more vertices is
/// the candidate; if it fails to dominate some block, the lowest vertex ids
/// of the candidate and of the first such block are exchanged, making both
/// blocks two-sided. The result is re-verified.
///
/// Throws ContractError when `sides` is not a pair of cliques covering V
/// or `pi` is not upper domatic, and VerificationError if the exchanged
/// partition fails its check.
VertexPartition source_set_transform(const Graph &g, const Bipartition &sides,
                                     const VertexPartition &pi);

/// D(G) = Tr(G) for co-bipartite graphs. The value is computed exhaustively,
/// so this is meant for small inputs. Throws ClassMismatchError when g is
/// not co-bipartite.
SolveResult upper_domatic_cobipartite(const Graph &g);

} // namespace updom
