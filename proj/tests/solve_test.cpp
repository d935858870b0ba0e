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


#include "support.hpp"
#include "updom/error.hpp"
#include "updom/oracle.hpp"
#include "updom/solve.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace updom;
using updom::testing::blocks;
using updom::testing::make_graph;
using updom::testing::paw;

TEST_CASE("auto dispatch picks the class solver") {
    SolveReport pw = solve(paw());
    CHECK(pw.method == "split");
    CHECK(pw.upper_domatic == 3);
    CHECK(pw.transitivity == 3);

    SolveReport c4 = solve(cycle_graph(4));
    CHECK(c4.method == "unicyclic");
    CHECK(c4.upper_domatic == 3);
    CHECK(c4.witness_transitive);
    CHECK(classify_partition(cycle_graph(4), c4.witness).transitive);

    CHECK(solve(path_graph(6)).method == "tree");
    CHECK(solve(cycle_graph(5)).method == "unicyclic");
    CHECK(solve(complement(cycle_graph(6))).method == "cobip");
    CHECK(solve(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {3, 4}, {4, 0}})).method ==
          "split");

    SolveReport k12 = solve(complete_graph(12));
    CHECK(k12.method == "split");
    CHECK(k12.upper_domatic == 12);
}

TEST_CASE("named methods and guards") {
    SolveOptions oracle;
    oracle.method = Method::Oracle;
    CHECK_THROWS_AS(solve(complete_graph(12), oracle), SizeCapError);
    oracle.force = true;
    oracle.oracle_cap = 11;
    CHECK(solve(complete_graph(5), oracle).upper_domatic == 5);

    SolveOptions tree;
    tree.method = Method::Tree;
    CHECK_THROWS_AS(solve(cycle_graph(4), tree), ClassMismatchError);
    SolveOptions cobip;
    cobip.method = Method::Cobip;
    CHECK_THROWS_AS(solve(complete_graph(12), cobip), SizeCapError);

    CHECK(parse_method("unicyclic") == Method::Unicyclic);
    CHECK_THROWS_AS(parse_method("magic"), ContractError);
}

TEST_CASE("disconnected graphs combine component values") {
    // C5 next to P5 and an isolated vertex.
    Graph g = make_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    SolveReport r = solve(g);
    CHECK(r.method == "components");
    CHECK(r.component_methods == std::vector<std::string>{"unicyclic", "tree", "split"});
    CHECK(r.upper_domatic == upper_domatic_bf(g).value);
    CHECK(classify_partition(g, r.witness).transitive);
    CHECK(r.witness.order() == r.upper_domatic);
}

TEST_CASE("auto agrees with the oracle on every graph with n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : nonisomorphic_graphs(n)) {
            SolveReport r = solve(g);
            REQUIRE(r.upper_domatic == upper_domatic_bf(g).value);
            REQUIRE(r.witness.order() == r.upper_domatic);
            PartitionKind kind = classify_partition(g, r.witness);
            REQUIRE(kind.upper_domatic);
            REQUIRE(kind.transitive == r.witness_transitive);
        }
}

TEST_CASE("reports render as text and json") {
    Graph c4 = cycle_graph(4);
    SolveReport r = solve(c4);
    std::string text = to_text(c4, r);
    CHECK(text.find("D: 3") != std::string::npos);
    CHECK(text.find("method: unicyclic") != std::string::npos);
    auto j = nlohmann::json::parse(to_json(c4, r));
    CHECK(j["D"] == 3);
    CHECK(j["Tr"] == 3);
    CHECK(j["witness"].size() == 3);
    CHECK(j["witness_kind"] == "transitive");
}

TEST_CASE("partition text uses graph vertex names") {
    Graph k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
    VertexPartition p = parse_partition_for(k3, "1\n2 3\n");
    CHECK(p == blocks({{0}, {1, 2}}));
    CHECK(partition_text_for(k3, p) == "1\n2 3\n");
    CHECK_THROWS_AS(parse_partition_for(k3, "0\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_partition_for(path_graph(3), "0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_partition_for(path_graph(3), "0 1\n1 2\n"), ParseError);
}

TEST_CASE("check reports") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}});
    CheckReport r = check_partition(g, blocks({{0, 3, 4}, {1}, {2}}));
    CHECK(r.kinds.upper_domatic);
    CHECK(r.kinds.transitive);
    CHECK_FALSE(r.kinds.domatic);
    CHECK(r.sources == std::vector<int>{0});
    CHECK(r.sinks == std::vector<int>{1, 2});
    CHECK(r.in_degrees == std::vector<int>{0, 2, 2});
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["sources"] == nlohmann::json::array({1}));
    CHECK(j["sinks"] == nlohmann::json::array({2, 3}));
    CHECK(to_text(r).find("upper-domatic: yes") != std::string::npos);
}

TEST_CASE("generator families") {
    auto batch = generate("unicyclic", 9, 7, 3);
    REQUIRE(batch.size() == 3);
    for (const Graph &g : batch)
        CHECK(g.size() == 9);
    CHECK(generate("chain", 7, 1, 1).front().order() == 7);
    CHECK_THROWS_AS(generate("cycle", 2, 1, 1), ContractError);
    CHECK_THROWS_AS(generate("hypercube", 4, 1, 1), ContractError);
    CHECK_THROWS_AS(generate("path", 4, 1, 0), ContractError);
}

TEST_CASE("hunt streams and summaries") {
    CHECK(hunt_stream("exhaustive", 4, 5, 1, 0).size() == 11 + 34);
    CHECK(hunt_stream("random", 6, 7, 3, 5).size() == 10);
    CHECK(hunt_stream("complete", 1, 4, 0, 0).size() == 4);
    CHECK(hunt_stream("exhaustive", 5, 4, 0, 0).empty());
    CHECK_THROWS_AS(hunt_stream("exhaustive", 9, 9, 0, 0), ContractError);
    CHECK_THROWS_AS(hunt_stream("nowhere", 3, 3, 0, 0), ContractError);

    auto summary = run_hunt(hunt_stream("exhaustive", 4, 6, 1, 0), 2);
    CHECK(summary.records.size() == 11 + 34 + 156);
    CHECK(summary.counterexamples == 0);
    CHECK(summary.text.find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("selftest detects an injected fault") {
    SelftestOptions quick;
    quick.quick = true;
    CHECK(selftest(quick).passed);
    quick.inject_fault = true;
    SelftestResult bad = selftest(quick);
    CHECK_FALSE(bad.passed);
    CHECK(bad.log.find("FAIL") != std::string::npos);
}
