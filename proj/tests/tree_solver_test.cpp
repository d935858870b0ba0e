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
#include "updom/tree_solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace updom;
using updom::testing::make_graph;

namespace {

int z_brute(const std::vector<int> &values) {
    const int n = static_cast<int>(values.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> pick;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                pick.push_back(values[static_cast<size_t>(i)]);
        std::sort(pick.begin(), pick.end());
        bool ok = true;
        for (size_t q = 0; q < pick.size(); ++q)
            ok = ok && pick[q] >= static_cast<int>(q) + 1;
        if (ok)
            best = std::max(best, static_cast<int>(pick.size()));
    }
    return best;
}

std::vector<Vertex> iota_ids(size_t count) {
    std::vector<Vertex> ids(count);
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

} // namespace

TEST_CASE("z value examples") {
    CHECK(z_value(std::vector<int>{1, 2, 3}) == 3);
    CHECK(z_value(std::vector<int>{1, 1, 1}) == 1);
    CHECK(z_value(std::vector<int>{2, 2, 5}) == 3);
    CHECK(z_value(std::vector<int>{1, 3, 3, 3}) == 3);
    CHECK(z_value(std::vector<int>{}) == 0);
}

TEST_CASE("z value matches subsequence brute force") {
    // Every multiset with entries 1..6 and length up to 6, as sorted tuples.
    std::vector<int> values;
    std::function<void(int)> extend = [&](int low) {
        REQUIRE(z_value(values) == z_brute(values));
        std::vector<int> reversed(values.rbegin(), values.rend());
        REQUIRE(z_value(reversed) == z_brute(values));
        if (values.size() == 6)
            return;
        for (int v = low; v <= 6; ++v) {
            values.push_back(v);
            extend(v);
            values.pop_back();
        }
    };
    extend(1);
}

TEST_CASE("greedy chain prefers small values then small ids") {
    std::vector<int> values{3, 1, 2, 1};
    auto ids = iota_ids(values.size());
    Chain chain = greedy_chain(values, ids);
    CHECK(chain.z == 3);
    CHECK(chain.chosen == std::vector<int>{1, 2, 0});
    CHECK(chain.spare == std::vector<int>{3});
}

TEST_CASE("rooted transitive numbers on small trees") {
    auto p3 = rooted_transitive_numbers(path_graph(3), 0);
    CHECK(p3.value(2) == 1);
    CHECK(p3.value(1) == 2);
    CHECK(p3.value(0) == 2);

    CHECK(rooted_transitive_numbers(star_graph(5), 0).value(0) == 2);

    // Legs 1, 2 and 3 edges long give child values (1, 2, 2).
    Graph spider = make_graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
    auto dp = rooted_transitive_numbers(spider, 0);
    CHECK(dp.child_values(0) == std::vector<int>{1, 2, 2});
    CHECK(dp.value(0) == 3);
    CHECK(transitivity_bf(spider).value == 3);

    CHECK_THROWS_AS(rooted_transitive_numbers(cycle_graph(4), 0), ClassMismatchError);
}

TEST_CASE("transitive number examples") {
    CHECK(transitive_number(path_graph(2), 0) == 2);
    CHECK(transitive_number(path_graph(2), 1) == 2);
    CHECK(transitive_number(path_graph(5), 2) == 3);
    for (int n = 3; n <= 7; ++n) {
        CHECK(transitive_number(star_graph(n), 0) == 2);
        CHECK(transitive_number(star_graph(n), 1) == 2);
    }
}

TEST_CASE("transitive numbers match exhaustive search on trees with n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph &t : nonisomorphic_graphs(n)) {
            if (!is_tree(t))
                continue;
            for (Vertex x = 0; x < n; ++x)
                REQUIRE(transitive_number(t, x) == transitive_number_bf(t, x));
        }
}

TEST_CASE("allowed positions examples") {
    auto check = [](std::vector<int> values, int child, std::vector<int> expected) {
        auto ids = iota_ids(values.size());
        Chain chain = greedy_chain(values, ids);
        CHECK(allowed_positions(values, chain, child) == expected);
        CHECK(allowed_positions_exact(values, chain.z, child) == expected);
    };
    check({1, 2, 3}, 1, {2});
    check({2, 2}, 0, {1, 2});
    check({1, 1}, 0, {1});
}

TEST_CASE("allowed positions agree with exhaustive labelings on trees with n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph &t : nonisomorphic_graphs(n)) {
            if (!is_tree(t))
                continue;
            for (Vertex x = 0; x < n; ++x) {
                auto dp = rooted_transitive_numbers(t, x);
                const int top = dp.value(x);
                for (Vertex child : dp.children[static_cast<size_t>(x)]) {
                    std::vector<int> expected;
                    for (int i = 1; i <= top - 1; ++i) {
                        LabelingQuery query;
                        query.fixed = {{x, top}, {child, i}};
                        query.max_label = top;
                        if (find_labeling(t, query))
                            expected.push_back(i);
                    }
                    REQUIRE(allowed_positions(dp, x, child) == expected);
                }
            }
        }
}

TEST_CASE("tree witnesses are transitive and maximum") {
    for (int n = 2; n <= 9; ++n)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Graph t = random_tree(n, seed);
            SolveResult r = transitivity_tree(t);
            REQUIRE(r.witness.order() == r.value);
            REQUIRE(classify_partition(t, r.witness).transitive);
            REQUIRE(r.value == transitivity_bf(t).value);
        }
    // Forests combine component values by max.
    Graph forest = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    SolveResult r = transitivity_tree(forest);
    CHECK(r.value == 3);
    CHECK(classify_partition(forest, r.witness).transitive);
    CHECK_THROWS_AS(transitivity_tree(cycle_graph(3)), ContractError);
}

TEST_CASE("assign_subtree realises every label up to the rooted value") {
    Graph t = random_tree(9, 4);
    auto dp = rooted_transitive_numbers(t, 0);
    for (int label = 1; label <= dp.value(0); ++label) {
        std::vector<int> labels(9, 0);
        assign_subtree(dp, 0, label, labels);
        CHECK(labels[0] == label);
        CHECK(classify_partition(t, partition_from_labeling(labels)).transitive);
    }
}
