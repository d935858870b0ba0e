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
#include "updom/split_solver.hpp"

#include <doctest.h>

#include <algorithm>

using namespace updom;
using updom::testing::make_graph;
using updom::testing::net;
using updom::testing::paw;

TEST_CASE("split values on named graphs") {
    CHECK(upper_domatic_split(paw()).value == 3);
    CHECK(upper_domatic_split(net()).value == 4);
    CHECK(upper_domatic_split(complete_graph(5)).value == 5);

    Graph star = star_graph(4);
    auto cert = recognize_split(star);
    REQUIRE(cert.has_value());
    CHECK(cert->clique.size() == 2);
    CHECK(std::find(cert->clique.begin(), cert->clique.end(), 0) != cert->clique.end());
    CHECK(upper_domatic_split(star, *cert).value == 2);

    CHECK_THROWS_AS(upper_domatic_split(cycle_graph(4)), ClassMismatchError);
}

TEST_CASE("invalid certificates are rejected") {
    SplitCertificate bad;
    bad.clique = {0, 2};
    bad.independent = {1, 3};
    bad.omega = 2;
    CHECK_THROWS_AS(upper_domatic_split(path_graph(4), bad), ContractError);
}

TEST_CASE("witness shape follows the branch") {
    // Every clique vertex of the net has a pendant, so the value is omega + 1.
    Graph g = net();
    auto cert = *recognize_split(g);
    SolveResult r = upper_domatic_split(g, cert);
    REQUIRE(r.value == cert.omega + 1);
    std::vector<Vertex> first = r.witness.blocks.front();
    std::vector<Vertex> independent = cert.independent;
    std::sort(independent.begin(), independent.end());
    CHECK(first == independent);
    for (int i = 1; i < r.witness.order(); ++i)
        CHECK(r.witness.blocks[static_cast<size_t>(i)].size() == 1);
    CHECK(classify_partition(g, r.witness).transitive);

    SolveResult pw = upper_domatic_split(paw());
    CHECK(pw.value == 3);
    CHECK(classify_partition(paw(), pw.witness).upper_domatic);
}

TEST_CASE("split values equal exhaustive search") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : nonisomorphic_graphs(n)) {
            auto cert = recognize_split(g);
            if (!cert)
                continue;
            SolveResult r = upper_domatic_split(g, *cert);
            REQUIRE(r.witness.order() == r.value);
            REQUIRE(classify_partition(g, r.witness).upper_domatic);
            REQUIRE(r.value == upper_domatic_bf(g).value);
            REQUIRE(r.value == transitivity_bf(g).value);
            const bool omega_branch = r.value == cert->omega;
            REQUIRE((omega_branch || r.value == cert->omega + 1));
            if (!omega_branch)
                REQUIRE(classify_partition(g, r.witness).transitive);
        }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_split(9, seed);
        SolveResult r = upper_domatic_split(g);
        REQUIRE(classify_partition(g, r.witness).upper_domatic);
        REQUIRE(r.value == upper_domatic_bf(g).value);
    }
}
