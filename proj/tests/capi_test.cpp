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


#include "updom/updom.h"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

/// Owns a library string.
std::string take(char *text) {
    std::string out = text ? text : "";
    updom_string_free(text);
    return out;
}

} // namespace

TEST_CASE("graph handles") {
    updom_graph *g = nullptr;
    REQUIRE(updom_graph_parse("0 1\n1 2\n2 3\n3 0\n", UPDOM_FORMAT_EDGELIST, &g) == UPDOM_OK);
    CHECK(updom_graph_order(g) == 4);
    CHECK(updom_graph_size(g) == 4);
    char *text = nullptr;
    REQUIRE(updom_graph_edge_list(g, &text) == UPDOM_OK);
    CHECK(take(text) == "n 4\n0 1\n0 3\n1 2\n2 3\n");
    REQUIRE(updom_graph_classes(g, &text) == UPDOM_OK);
    std::string classes = take(text);
    CHECK(classes.find("Unicyclic") != std::string::npos);
    CHECK(classes.find("General") != std::string::npos);
    updom_graph_destroy(g);

    REQUIRE(updom_graph_parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", UPDOM_FORMAT_AUTO, &g) == UPDOM_OK);
    CHECK(updom_graph_size(g) == 3);
    updom_graph_destroy(g);
}

TEST_CASE("errors map to status codes") {
    updom_graph *g = nullptr;
    CHECK(updom_graph_parse("0 1\n1 q\n", UPDOM_FORMAT_EDGELIST, &g) == UPDOM_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(updom_last_error()).find("line 2") != std::string::npos);
    CHECK(updom_graph_parse(nullptr, UPDOM_FORMAT_AUTO, &g) == UPDOM_ERR_CONTRACT);
    CHECK(updom_graph_generate("cycle", 2, 1, &g) == UPDOM_ERR_CONTRACT);
    CHECK(std::string(updom_status_name(UPDOM_ERR_SIZE_CAP)) == "size cap exceeded");

    REQUIRE(updom_graph_generate("complete", 12, 1, &g) == UPDOM_OK);
    updom_solution *s = nullptr;
    CHECK(updom_solve(g, "oracle", 0, &s) == UPDOM_ERR_SIZE_CAP);
    CHECK(updom_solve(g, "tree", 0, &s) == UPDOM_ERR_CLASS_MISMATCH);
    CHECK(updom_solve(g, "wizard", 0, &s) == UPDOM_ERR_CONTRACT);
    CHECK(s == nullptr);
    REQUIRE(updom_solve(g, "auto", 0, &s) == UPDOM_OK);
    CHECK(std::string(updom_last_error()).empty());
    CHECK(updom_solution_upper_domatic(s) == 12);
    updom_solution_destroy(s);
    updom_graph_destroy(g);
}

TEST_CASE("solve and check round trip") {
    updom_graph *g = nullptr;
    REQUIRE(updom_graph_generate("unicyclic", 9, 7, &g) == UPDOM_OK);
    CHECK(updom_graph_size(g) == 9);
    updom_solution *s = nullptr;
    REQUIRE(updom_solve(g, nullptr, 0, &s) == UPDOM_OK);
    const int value = updom_solution_upper_domatic(s);
    CHECK(value >= 2);
    CHECK(updom_solution_transitivity(s) == value);
    char *text = nullptr;
    REQUIRE(updom_solution_method(s, &text) == UPDOM_OK);
    CHECK(take(text) == "unicyclic");
    REQUIRE(updom_solution_json(s, &text) == UPDOM_OK);
    CHECK(take(text).find("\"D\":" + std::to_string(value)) != std::string::npos);
    REQUIRE(updom_solution_text(s, &text) == UPDOM_OK);
    CHECK(take(text).find("D: " + std::to_string(value)) != std::string::npos);

    REQUIRE(updom_solution_witness(s, &text) == UPDOM_OK);
    std::string witness = take(text);
    updom_partition *p = nullptr;
    REQUIRE(updom_partition_parse(g, witness.c_str(), &p) == UPDOM_OK);
    CHECK(updom_partition_order(p) == value);
    updom_check *c = nullptr;
    REQUIRE(updom_check_partition(g, p, &c) == UPDOM_OK);
    int holds = 0;
    REQUIRE(updom_check_has_kind(c, "transitive", &holds) == UPDOM_OK);
    CHECK(holds == 1);
    CHECK(updom_check_has_kind(c, "sideways", &holds) == UPDOM_ERR_CONTRACT);
    REQUIRE(updom_check_json(c, &text) == UPDOM_OK);
    CHECK(take(text).find("\"sinks\"") != std::string::npos);
    REQUIRE(updom_check_text(c, &text) == UPDOM_OK);
    CHECK(take(text).find("transitive: yes") != std::string::npos);
    updom_check_destroy(c);
    updom_partition_destroy(p);
    updom_solution_destroy(s);

    CHECK(updom_partition_parse(g, "0 1\n", &p) == UPDOM_ERR_PARSE);
    updom_graph_destroy(g);
}

TEST_CASE("hunt writes json lines") {
    const std::string path = "capi_hunt.jsonl";
    char *summary = nullptr;
    int counterexamples = -1;
    REQUIRE(updom_hunt("exhaustive", 3, 5, 1, 0, 2, path.c_str(), &summary, &counterexamples) == UPDOM_OK);
    CHECK(counterexamples == 0);
    CHECK(take(summary).find("counterexamples: 0") != std::string::npos);
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line);)
        lines += !line.empty();
    CHECK(lines == 4 + 11 + 34);
    std::remove(path.c_str());

    CHECK(updom_hunt("exhaustive", 3, 3, 1, 0, 1, "/nonexistent-dir/x.jsonl", &summary, nullptr) ==
          UPDOM_ERR_IO);
}

TEST_CASE("selftest through the C API") {
    int passed = 0;
    char *log = nullptr;
    REQUIRE(updom_selftest(1, 0, &passed, &log) == UPDOM_OK);
    CHECK(passed == 1);
    take(log);
    REQUIRE(updom_selftest(1, 1, &passed, &log) == UPDOM_OK);
    CHECK(passed == 0);
    CHECK(take(log).find("FAIL") != std::string::npos);
}
