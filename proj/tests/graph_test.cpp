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
#include "updom/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace updom;
using updom::testing::make_graph;
using updom::testing::paw;

namespace {

bool brute_split(const Graph &g) {
    const int n = g.order();
    for (unsigned clique = 0; clique < (1u << n); ++clique) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                bool both_in = (clique >> u & 1) && (clique >> v & 1);
                bool both_out = !(clique >> u & 1) && !(clique >> v & 1);
                if (both_in && !g.adjacent(u, v))
                    ok = false;
                if (both_out && g.adjacent(u, v))
                    ok = false;
            }
        if (ok)
            return true;
    }
    return false;
}

bool brute_2k2_free(const Graph &g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    // Three ways to split four vertices into two pairs.
                    int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (auto &pr : pairings) {
                        int p = quad[pr[0]], q = quad[pr[1]], r = quad[pr[2]], s = quad[pr[3]];
                        if (g.adjacent(p, q) && g.adjacent(r, s) && !g.adjacent(p, r) &&
                            !g.adjacent(p, s) && !g.adjacent(q, r) && !g.adjacent(q, s))
                            return false;
                    }
                }
    return true;
}

bool has(const Classification &c, GraphClass tag) {
    return std::find(c.tags.begin(), c.tags.end(), tag) != c.tags.end();
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3 == path_graph(3));

    Graph e4 = parse_edge_list("n 4\n");
    CHECK(e4.order() == 4);
    CHECK(e4.size() == 0);

    CHECK(parse_edge_list("0 1\n0 1").size() == 1);
    CHECK(parse_edge_list("# comment\n0 1 # trailing\n\n2 3").size() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parse_edge_list("0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
}

TEST_CASE("dimacs parsing") {
    CHECK(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3") == complete_graph(3));
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3"), ParseError);
    Graph e5 = parse_dimacs("p edge 5 0");
    CHECK(e5.order() == 5);
    CHECK(e5.size() == 0);
    CHECK_THROWS_AS(parse_dimacs("e 1 2"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2"), ParseError);
    CHECK(parse_graph_auto("c hi\np edge 2 1\ne 1 2") == complete_graph(2));
    CHECK(parse_graph_auto("0 1") == complete_graph(2));
}

TEST_CASE("edge list round trip") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_gnp(8, 0.4, seed);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}

TEST_CASE("complement examples") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(complement(empty_graph(3)) == complete_graph(3));
    // P4 a-b-c-d maps to the path b-d-a-c.
    Graph co = complement(path_graph(4));
    CHECK(co == make_graph(4, {{1, 3}, {3, 0}, {0, 2}}));
}

TEST_CASE("complement is an involution on every graph with n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph &g) {
            REQUIRE(complement(complement(g)) == g);
            return true;
        });
}

TEST_CASE("classification examples") {
    Classification p5 = classify(path_graph(5));
    CHECK(has(p5, GraphClass::Tree));
    CHECK_FALSE(has(p5, GraphClass::TwoK2Free));
    CHECK_FALSE(has(p5, GraphClass::Split));
    CHECK(p5.tags.back() == GraphClass::General);

    Classification c4 = classify(cycle_graph(4));
    CHECK(has(c4, GraphClass::Unicyclic));
    CHECK(has(c4, GraphClass::CoBipartite));
    CHECK(has(c4, GraphClass::TwoK2Free));
    CHECK_FALSE(has(c4, GraphClass::Split));

    Classification pw = classify(paw());
    CHECK(has(pw, GraphClass::Unicyclic));
    CHECK(has(pw, GraphClass::Split));
    CHECK(has(pw, GraphClass::TwoK2Free));
    REQUIRE(pw.split.has_value());
    CHECK(pw.split->omega == 3);
    std::vector<Vertex> clique = pw.split->clique;
    std::sort(clique.begin(), clique.end());
    CHECK(clique == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("classification agrees with brute force for n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph &g : nonisomorphic_graphs(n)) {
            Classification c = classify(g);
            REQUIRE(has(c, GraphClass::Split) == brute_split(g));
            REQUIRE(has(c, GraphClass::TwoK2Free) == brute_2k2_free(g));
            REQUIRE(has(c, GraphClass::Tree) == (is_connected(g) && g.size() == n - 1));
            REQUIRE(has(c, GraphClass::Unicyclic) == (is_connected(g) && g.size() == n));
            REQUIRE(has(c, GraphClass::CoBipartite) == bipartition(complement(g)).has_value());
            if (c.split) {
                verify(g, *c.split);
                // Normalized: no independent vertex sees the whole clique.
                for (Vertex s : c.split->independent) {
                    bool sees_all = std::all_of(c.split->clique.begin(), c.split->clique.end(),
                                                [&](Vertex k) { return g.adjacent(s, k); });
                    REQUIRE_FALSE(sees_all);
                }
            }
            if (c.unicyclic) {
                const auto &cyc = c.unicyclic->cycle;
                std::set<Vertex> distinct(cyc.begin(), cyc.end());
                REQUIRE(distinct.size() == cyc.size());
                for (size_t i = 0; i < cyc.size(); ++i)
                    REQUIRE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
            REQUIRE(c.tags.back() == GraphClass::General);
        }
}

TEST_CASE("generators") {
    CHECK(path_graph(1).size() == 0);
    CHECK(cycle_graph(5).size() == 5);
    CHECK(complete_graph(5).size() == 10);
    CHECK(star_graph(5).degree(0) == 4);
    CHECK_THROWS_AS(cycle_graph(2), ContractError);
    CHECK_THROWS_AS(path_graph(0), ContractError);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph uc = random_unicyclic(9, seed);
        CHECK(is_connected(uc));
        CHECK(uc.size() == 9);
        CHECK(recognize_unicyclic(uc).has_value());

        Graph t = random_tree(10, seed);
        CHECK(is_connected(t));
        CHECK(t.size() == 9);

        CHECK(recognize_split(random_split(9, seed)).has_value());

        Graph chain = random_bipartite_chain(3, 3, seed);
        auto cert = recognize_bipartite_chain(chain);
        REQUIRE(cert.has_value());
        for (const auto *side : {&cert->x_order, &cert->y_order})
            for (size_t i = 0; i + 1 < side->size(); ++i) {
                auto later = chain.neighbors((*side)[i + 1]);
                for (Vertex w : later)
                    CHECK(chain.adjacent((*side)[i], w));
            }
    }
    CHECK(random_tree(12, 3) == random_tree(12, 3));

    int count = 0;
    for_each_labeled_graph(3, [&](const Graph &) {
        ++count;
        return true;
    });
    CHECK(count == 8);
}

TEST_CASE("isomorphism classes") {
    // Numbers of unlabeled graphs on n vertices.
    const size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(nonisomorphic_graphs(n).size() == expected[n]);
    Graph g = random_gnp(7, 0.5, 9);
    std::vector<Vertex> perm{3, 6, 0, 5, 1, 4, 2};
    CHECK(canonical_code(g.induced(perm)) == canonical_code(g));
    CHECK(canonical_code(graph_from_code(7, canonical_code(g))) == canonical_code(g));
}

TEST_CASE("induced subgraph and components") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[2] == std::vector<Vertex>{5});
    std::vector<Vertex> keep{2, 1};
    Graph sub = g.induced(keep);
    CHECK(sub == complete_graph(2));
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), ContractError);
}
