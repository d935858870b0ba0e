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
#include "updom/cobip.hpp"
#include "updom/error.hpp"
#include "updom/oracle.hpp"

#include <doctest.h>

using namespace updom;
using updom::testing::blocks;
using updom::testing::make_graph;

namespace {

bool has_source(const Graph &g, const VertexPartition &p) {
    return !sources(domination_digraph(g, p)).empty();
}

} // namespace

TEST_CASE("co-bipartite recognition") {
    Bipartition sides;
    CHECK(is_cobipartite(complete_graph(4), &sides));
    CHECK(sides.x.size() + sides.y.size() == 4);
    CHECK(is_cobipartite(cycle_graph(4)));
    CHECK_FALSE(is_cobipartite(cycle_graph(5)));
    CHECK_FALSE(is_cobipartite(empty_graph(3)));
}

TEST_CASE("source transform examples") {
    Graph k4 = complete_graph(4);
    Bipartition sides;
    REQUIRE(is_cobipartite(k4, &sides));
    VertexPartition singletons = blocks({{0}, {1}, {2}, {3}});
    CHECK(source_set_transform(k4, sides, singletons) == singletons);

    Graph c4 = cycle_graph(4);
    REQUIRE(is_cobipartite(c4, &sides));
    for (const auto &pi : all_D_partitions(c4)) {
        REQUIRE(pi.order() == 3);
        VertexPartition out = source_set_transform(c4, sides, pi);
        CHECK(out.order() == 3);
        CHECK(classify_partition(c4, out).upper_domatic);
        CHECK(has_source(c4, out));
    }
}

TEST_CASE("swap branch on a one-sided block") {
    // Cliques X = {0, 1} and Y = {2, 3, 4} joined by 0-3 and 1-4.
    Graph g = make_graph(5, {{0, 1}, {0, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    Bipartition sides{{0, 1}, {2, 3, 4}};
    // Vertex 2 has no neighbor in X, so V_1 = X does not dominate V_2 = Y.
    VertexPartition pi = blocks({{0, 1}, {2, 3, 4}});
    REQUIRE(classify_partition(g, pi).upper_domatic);
    VertexPartition out = source_set_transform(g, sides, pi);
    CHECK(out.order() == pi.order());
    CHECK(out == blocks({{1, 2}, {0, 3, 4}}));
    CHECK(classify_partition(g, out).upper_domatic);
    CHECK(has_source(g, out));
}

TEST_CASE("transform on every upper domatic partition of small co-bipartite graphs") {
    int swaps = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : nonisomorphic_graphs(n)) {
            Bipartition sides;
            if (!is_cobipartite(g, &sides))
                continue;
            for (int k = 1; k <= n; ++k)
                for_each_upper_domatic_partition(g, k, [&](const VertexPartition &pi) {
                    VertexPartition out = source_set_transform(g, sides, pi);
                    REQUIRE(out.order() == k);
                    REQUIRE(classify_partition(g, out).upper_domatic);
                    REQUIRE(has_source(g, out));
                    REQUIRE(source_set_transform(g, sides, out) == out);
                    swaps += out != pi;
                    return true;
                });
        }
    CHECK(swaps > 0);
}

TEST_CASE("transform preconditions") {
    Graph c4 = cycle_graph(4);
    Bipartition wrong{{0, 2}, {1, 3}};
    CHECK_THROWS_AS(source_set_transform(c4, wrong, blocks({{0, 1}, {2, 3}})), ContractError);
    Bipartition sides;
    REQUIRE(is_cobipartite(c4, &sides));
    // {0} and {2} are non-adjacent, so neither dominates the other.
    CHECK_THROWS_AS(source_set_transform(c4, sides, blocks({{0}, {2}, {1, 3}})), ContractError);
}

TEST_CASE("co-bipartite values") {
    for (int n = 1; n <= 6; ++n)
        CHECK(upper_domatic_cobipartite(complete_graph(n)).value == n);
    Graph co_p4 = complement(path_graph(4));
    CHECK(upper_domatic_cobipartite(co_p4).value == upper_domatic_bf(co_p4).value);
    Graph co_chain = complement(random_bipartite_chain(3, 3, 5));
    auto r = upper_domatic_cobipartite(co_chain);
    CHECK(r.value == upper_domatic_bf(co_chain).value);
    CHECK(r.value == transitivity_bf(co_chain).value);
    CHECK(classify_partition(co_chain, r.witness).transitive);
    CHECK_THROWS_AS(upper_domatic_cobipartite(cycle_graph(5)), ClassMismatchError);

    for (int n = 1; n <= 7; ++n)
        for (const Graph &g : nonisomorphic_graphs(n))
            if (is_cobipartite(g))
                REQUIRE(transitivity_bf(g).value == upper_domatic_bf(g).value);
}
