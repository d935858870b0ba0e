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
#include "updom/partition.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace updom::testing {

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

inline VertexPartition blocks(std::initializer_list<std::vector<Vertex>> parts) {
    return VertexPartition{std::vector<std::vector<Vertex>>(parts)};
}

/// Triangle 0-1-2 with pendant 3 on vertex 0.
inline Graph paw() { return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

/// Triangle 0-1-2 with pendants 3, 4, 5 on 0, 1, 2.
inline Graph net() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

inline std::string read_data(const std::string &name) {
    std::ifstream in(std::string(UPDOM_TEST_DATA) + "/" + name);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

/// Fixture pair `<stem>.graph` (edge list) and `<stem>.part` (partition).
struct Fixture {
    Graph graph;
    VertexPartition partition;
};

inline Fixture load_fixture(const std::string &stem) {
    return {parse_edge_list(read_data(stem + ".graph")), parse_partition(read_data(stem + ".part"))};
}

} // namespace updom::testing
