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

#include "updom/cobip.hpp"

#include "updom/error.hpp"

#include <algorithm>

namespace updom {

bool is_cobipartite(const Graph &g, Bipartition *sides) {
    auto parts = bipartition(complement(g));
    if (!parts)
        return false;
    if (sides)
        *sides = *parts;
    return true;
}

namespace {

void check_sides(const Graph &g, const Bipartition &sides) {
    std::vector<int> side(static_cast<size_t>(g.order()), -1);
    for (int s = 0; s < 2; ++s)
        for (Vertex v : s == 0 ? sides.x : sides.y) {
            if (v < 0 || v >= g.order() || side[static_cast<size_t>(v)] != -1)
                throw ContractError("source_set_transform: sides overlap or leave range");
            side[static_cast<size_t>(v)] = s;
        }
    if (std::count(side.begin(), side.end(), -1) != 0)
        throw ContractError("source_set_transform: sides do not cover V");
    for (const auto *part : {&sides.x, &sides.y})
        for (size_t i = 0; i < part->size(); ++i)
            for (size_t j = i + 1; j < part->size(); ++j)
                if (!g.adjacent((*part)[i], (*part)[j]))
                    throw ContractError("source_set_transform: a side is not a clique");
}

} // namespace

VertexPartition source_set_transform(const Graph &g, const Bipartition &sides,
                                     const VertexPartition &pi) {
    check_sides(g, sides);
    validate(g, pi);
    const auto digraph = domination_digraph(g, pi);
    if (!is_upper_domatic(digraph))
        throw ContractError("source_set_transform: partition is not upper domatic");
    std::vector<char> in_x(static_cast<size_t>(g.order()), 0);
    for (Vertex v : sides.x)
        in_x[static_cast<size_t>(v)] = 1;
    auto two_sided = [&](const std::vector<Vertex> &block) {
        bool x = false, y = false;
        for (Vertex v : block)
            (in_x[static_cast<size_t>(v)] ? x : y) = true;
        return x && y;
    };
    for (const auto &block : pi.blocks)
        if (two_sided(block))
            return pi;
    const int k = pi.order();
    int candidate = -1;
    for (int i = 0; i < k && candidate < 0; ++i)
        if (pi.blocks[static_cast<size_t>(i)].size() >= 2)
            candidate = i;
    if (candidate < 0)
        return pi; // all singletons: every block is a source
    int target = -1;
    for (int j = 0; j < k && target < 0; ++j)
        if (j != candidate && !digraph.edge(candidate, j))
            target = j;
    if (target < 0)
        return pi;
    VertexPartition out = pi;
    auto &from = out.blocks[static_cast<size_t>(candidate)];
    auto &to = out.blocks[static_cast<size_t>(target)];
    std::swap(from.front(), to.front());
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    const auto after = domination_digraph(g, out);
    if (!is_upper_domatic(after) || sources(after).empty())
        throw VerificationError("source_set_transform: exchanged partition lost the upper domatic "
                                "property or has no source");
    return out;
}

SolveResult upper_domatic_cobipartite(const Graph &g) {
    if (!is_cobipartite(g))
        throw ClassMismatchError("upper_domatic_cobipartite: complement is not bipartite");
    return transitivity_bf(g);
}

} // namespace updom
