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
#include "updom/sinkset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace updom {

enum class Method { Auto, Oracle, Tree, Unicyclic, Split, Cobip };

std::string_view to_string(Method m);
/// Accepts auto|oracle|tree|unicyclic|split|cobip; ContractError otherwise.
Method parse_method(std::string_view text);

struct SolveOptions {
    Method method = Method::Auto;
    int oracle_cap = 11; // exhaustive search refuses larger graphs unless forced
    bool force = false;
};

struct SolveReport {
    int n = 0;
    int m = 0;
    std::vector<GraphClass> classes;
    std::string method; // solver that produced the value; "components" when combined
    std::vector<std::string> component_methods;
    int upper_domatic = 0;
    std::optional<int> transitivity;
    VertexPartition witness;
    bool witness_transitive = false;
};

/// D(G), and Tr(G) when the solver yields it, with a witness partition.
///
/// Auto dispatch picks split, then forest, then unicyclic, then co-bipartite,
/// then the exhaustive oracle. A disconnected graph whose components all have
/// a class solver is solved per component and combined. Throws
/// ClassMismatchError when a named method does not fit the graph and
/// SizeCapError when exhaustive search would exceed the cap.
SolveReport solve(const Graph &g, const SolveOptions &options = {});

/// Vertex names follow g.label(v); blocks are numbered from 1.
std::string to_text(const Graph &g, const SolveReport &report);
std::string to_json(const Graph &g, const SolveReport &report);

/// Partition text whose vertex names are graph labels.
VertexPartition parse_partition_for(const Graph &g, std::string_view text);
std::string partition_text_for(const Graph &g, const VertexPartition &p);

struct CheckReport {
    DominationDigraph digraph;
    PartitionKind kinds;
    std::vector<int> sources; // 0-based
    std::vector<int> sinks;
    std::vector<int> in_degrees;
};

CheckReport check_partition(const Graph &g, const VertexPartition &p);
std::string to_text(const CheckReport &report);
std::string to_json(const CheckReport &report);

/// Generator families for the command line: path, cycle, complete, star,
/// tree, unicyclic, split, chain. Graph i of a batch uses seed + i.
std::vector<Graph> generate(std::string_view family, int n, std::uint64_t seed, int count);

/// Graph streams for hunting: exhaustive (one graph per isomorphism class,
/// n <= 8), random (`count` G(n, 1/2) graphs per order), complete, empty.
std::vector<Graph> hunt_stream(std::string_view source, int n_lo, int n_hi, std::uint64_t seed,
                               int count);

struct HuntSummary {
    std::vector<HuntRecord> records;
    std::string text; // counts by D and sink_exists
    int counterexamples = 0;
};

HuntSummary run_hunt(const std::vector<Graph> &stream, int workers, const HuntOptions &options = {});

struct SelftestOptions {
    bool quick = false;        // n <= 6 instead of n <= 7
    bool inject_fault = false; // corrupt one solver answer to prove detection
};

struct SelftestResult {
    bool passed = true;
    std::string log;
};

/// Cross-solver equivalence suites at reduced scale.
SelftestResult selftest(const SelftestOptions &options = {});

} // namespace updom
