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
#include "updom/partition.hpp"

#include <doctest.h>

using namespace updom;
using updom::testing::blocks;
using updom::testing::make_graph;

namespace {

bool brute_dominates(const Graph &g, const std::vector<Vertex> &a, const std::vector<Vertex> &b) {
    for (Vertex y : b) {
        bool hit = false;
        for (Vertex x : a)
            hit = hit || g.adjacent(x, y);
        if (!hit)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("dominates examples") {
    Graph p3 = path_graph(3);
    std::vector<Vertex> middle{1}, ends{0, 2}, first{0}, last{2};
    CHECK(dominates(p3, middle, ends));
    CHECK_FALSE(dominates(p3, first, last));
    Graph k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v)
        for (Vertex w = 0; w < 4; ++w)
            if (v != w) {
                std::vector<Vertex> a{v}, b{w};
                CHECK(dominates(k4, a, b));
            }
    std::vector<Vertex> overlap{0, 1};
    CHECK_THROWS_AS(dominates(p3, overlap, middle), ContractError);
}

TEST_CASE("dominates agrees with a double loop on every graph with n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph &g : nonisomorphic_graphs(n)) {
            int total = 1;
            for (int i = 0; i < n; ++i)
                total *= 3;
            // Each vertex goes to A, B, or neither.
            for (int code = 0; code < total; ++code) {
                std::vector<Vertex> a, b;
                int rest = code;
                for (Vertex v = 0; v < n; ++v, rest /= 3) {
                    if (rest % 3 == 1)
                        a.push_back(v);
                    else if (rest % 3 == 2)
                        b.push_back(v);
                }
                if (a.empty() || b.empty())
                    continue;
                REQUIRE(dominates(g, a, b) == brute_dominates(g, a, b));
            }
        }
}

TEST_CASE("domination digraph examples") {
    auto k3 = domination_digraph(complete_graph(3), blocks({{0}, {1}, {2}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(k3.edge(i, j) == (i != j));
    auto e3 = domination_digraph(empty_graph(3), blocks({{0}, {1}, {2}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK_FALSE(e3.edge(i, j));

    auto p4 = domination_digraph(path_graph(4), blocks({{2, 3}, {1}, {0}}));
    CHECK(p4.edge(0, 1));
    CHECK_FALSE(p4.edge(0, 2));
    CHECK_FALSE(p4.edge(1, 0));
    CHECK(p4.edge(1, 2));
    CHECK_FALSE(p4.edge(2, 0));
    CHECK(p4.edge(2, 1));
}

TEST_CASE("partition classification examples") {
    auto p4 = classify_partition(path_graph(4), blocks({{0, 3}, {2}, {1}}));
    CHECK(p4.grundy);
    CHECK(p4.transitive);
    CHECK(p4.upper_domatic);

    auto k2 = classify_partition(complete_graph(2), blocks({{0}, {1}}));
    CHECK(k2.domatic);
    CHECK(k2.transitive);
    CHECK(k2.grundy);

    auto c4 = classify_partition(cycle_graph(4), blocks({{2, 3}, {1}, {0}}));
    CHECK(c4.transitive);
    CHECK_FALSE(c4.grundy);

    auto e2 = classify_partition(empty_graph(2), blocks({{0}, {1}}));
    CHECK_FALSE(e2.upper_domatic);
    CHECK_FALSE(e2.domatic);
}

TEST_CASE("sources, sinks and in-degrees") {
    auto k3 = domination_digraph(complete_graph(3), blocks({{0}, {1}, {2}}));
    CHECK(sources(k3) == std::vector<int>{0, 1, 2});
    CHECK(sinks(k3) == std::vector<int>{0, 1, 2});
    CHECK(in_degrees(k3) == std::vector<int>{2, 2, 2});

    auto c4 = domination_digraph(cycle_graph(4), blocks({{2, 3}, {1}, {0}}));
    CHECK(sources(c4) == std::vector<int>{0});
    // {1} and {0} dominate each other, so both later blocks are sinks.
    CHECK(sinks(c4) == std::vector<int>{1, 2});
    CHECK(in_degrees(c4) == std::vector<int>{0, 2, 2});

    auto e2 = domination_digraph(empty_graph(2), blocks({{0}, {1}}));
    CHECK(sources(e2).empty());
    CHECK(sinks(e2).empty());
    CHECK_FALSE(is_upper_domatic(e2));

    auto k5 = domination_digraph(complete_graph(5), blocks({{0}, {1}, {2}, {3}, {4}}));
    CHECK(in_degrees(k5) == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(out_degrees(k5) == std::vector<int>{4, 4, 4, 4, 4});
}

TEST_CASE("kind lattice, transitive source and sink on every partition for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : nonisomorphic_graphs(n))
            for (int k = 1; k <= n; ++k)
                enumerate_partitions(n, k, [&](std::span<const int> rgs) {
                    VertexPartition p = VertexPartition::from_labels(rgs);
                    PartitionKind kind = classify_partition(g, p);
                    REQUIRE((!kind.grundy || kind.transitive));
                    REQUIRE((!kind.transitive || kind.upper_domatic));
                    REQUIRE((!kind.domatic || kind.upper_domatic));
                    if (kind.transitive) {
                        auto dd = domination_digraph(g, p);
                        auto src = sources(dd);
                        auto snk = sinks(dd);
                        REQUIRE(std::find(src.begin(), src.end(), 0) != src.end());
                        REQUIRE(std::find(snk.begin(), snk.end(), k - 1) != snk.end());
                    }
                    return true;
                });
}

TEST_CASE("partition text, validation and merging") {
    VertexPartition p = parse_partition("# two blocks\n0 2\n\n1 3 # tail\n");
    CHECK(p == blocks({{0, 2}, {1, 3}}));
    CHECK(parse_partition(to_text(p)) == p);
    CHECK_THROWS_AS(parse_partition("0 1\nz\n"), ParseError);

    Graph p4 = path_graph(4);
    CHECK_NOTHROW(validate(p4, p));
    CHECK_THROWS_AS(validate(p4, blocks({{0, 1}, {2}})), ContractError);
    CHECK_THROWS_AS(validate(p4, blocks({{0, 1}, {1, 2, 3}})), ContractError);
    CHECK_THROWS_AS(validate(p4, blocks({{0, 1, 2, 3}, {}})), ContractError);
    CHECK_THROWS_AS(validate(p4, blocks({{0, 1, 2, 7}})), ContractError);

    VertexPartition merged = merge_blocks(blocks({{0}, {1}, {2, 3}}), 2, 0);
    CHECK(merged.canonical() == blocks({{0, 2, 3}, {1}}));
    CHECK(merged.blocks.front().size() == 3);

    std::vector<int> labels{1, 0, 1, 2};
    CHECK(VertexPartition::from_labels(labels) == blocks({{1}, {0, 2}, {3}}));
    CHECK(parse_kind("grundy") == Kind::Grundy);
    CHECK_THROWS_AS(parse_kind("sideways"), ContractError);
}

TEST_CASE("dominating sets use closed neighborhoods") {
    Graph star = star_graph(4);
    std::vector<Vertex> center{0}, leaves{1, 2, 3};
    CHECK(is_dominating_set(star, center));
    CHECK(is_dominating_set(star, leaves));
    std::vector<Vertex> one_leaf{1};
    CHECK_FALSE(is_dominating_set(star, one_leaf));
}
