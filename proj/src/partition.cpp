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

#include "updom/partition.hpp"

#include "updom/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace updom {

std::vector<int> VertexPartition::block_of(int n) const {
    std::vector<int> out(static_cast<size_t>(n), -1);
    for (int b = 0; b < order(); ++b)
        for (Vertex v : blocks[static_cast<size_t>(b)]) {
            if (v < 0 || v >= n)
                throw ContractError("partition vertex " + std::to_string(v) + " out of range");
            out[static_cast<size_t>(v)] = b;
        }
    return out;
}

VertexPartition VertexPartition::from_labels(std::span<const int> label) {
    int k = 0;
    for (int l : label) {
        if (l < 0)
            throw ContractError("negative block label");
        k = std::max(k, l + 1);
    }
    VertexPartition p;
    p.blocks.resize(static_cast<size_t>(k));
    for (size_t v = 0; v < label.size(); ++v)
        p.blocks[static_cast<size_t>(label[v])].push_back(static_cast<Vertex>(v));
    for (const auto &b : p.blocks)
        if (b.empty())
            throw ContractError("block labels are not contiguous");
    return p;
}

VertexPartition VertexPartition::canonical() const {
    VertexPartition out = *this;
    for (auto &b : out.blocks)
        std::sort(b.begin(), b.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

void validate(const Graph &g, const VertexPartition &p) {
    const int n = g.order();
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (int b = 0; b < p.order(); ++b) {
        const auto &block = p.blocks[static_cast<size_t>(b)];
        if (block.empty())
            throw ContractError("block " + std::to_string(b + 1) + " is empty");
        for (Vertex v : block) {
            if (v < 0 || v >= n)
                throw ContractError("vertex " + std::to_string(v) + " in block " +
                                    std::to_string(b + 1) + " is not in the graph");
            if (seen[static_cast<size_t>(v)]++)
                throw ContractError("vertex " + std::to_string(v) + " appears twice");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ContractError("vertex " + std::to_string(v) + " is not covered");
}

VertexPartition parse_partition(std::string_view text) {
    VertexPartition p;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<Vertex> block;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ||
                                       line[i] == ','))
                ++i;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
                   line[j] != ',')
                ++j;
            if (j > i) {
                int v = 0;
                auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
                if (ec != std::errc{} || ptr != line.data() + j || v < 0)
                    throw ParseError("bad vertex '" + std::string(line.substr(i, j - i)) + "'",
                                     lineno);
                block.push_back(v);
            }
            i = j;
        }
        if (!block.empty())
            p.blocks.push_back(std::move(block));
        start = end + 1;
    }
    return p;
}

std::string to_text(const VertexPartition &p) {
    std::ostringstream out;
    for (const auto &block : p.blocks) {
        for (size_t i = 0; i < block.size(); ++i)
            out << (i ? " " : "") << block[i];
        out << '\n';
    }
    return out.str();
}

bool dominates(const Graph &g, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty() || b.empty())
        throw ContractError("dominates: sets must be nonempty");
    std::vector<char> in_a(static_cast<size_t>(g.order()), 0);
    for (Vertex v : a)
        in_a[static_cast<size_t>(v)] = 1;
    for (Vertex v : b)
        if (in_a[static_cast<size_t>(v)])
            throw ContractError("dominates: sets overlap at vertex " + std::to_string(v));
    for (Vertex v : b) {
        bool hit = false;
        for (Vertex w : g.neighbors(v))
            if (in_a[static_cast<size_t>(w)]) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

bool is_dominating_set(const Graph &g, std::span<const Vertex> s) {
    std::vector<char> covered(static_cast<size_t>(g.order()), 0);
    for (Vertex v : s) {
        covered[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            covered[static_cast<size_t>(w)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

DominationDigraph domination_digraph(const Graph &g, const VertexPartition &p) {
    validate(g, p);
    const int k = p.order();
    auto block = p.block_of(g.order());
    // hit[j * k + i]: number of vertices of block j with a neighbor in block i.
    std::vector<int> hit(static_cast<size_t>(k) * k, 0);
    std::vector<int> stamp(static_cast<size_t>(k), -1);
    for (int v = 0; v < g.order(); ++v) {
        const int j = block[static_cast<size_t>(v)];
        for (Vertex w : g.neighbors(v)) {
            const int i = block[static_cast<size_t>(w)];
            if (i != j && stamp[static_cast<size_t>(i)] != v) {
                stamp[static_cast<size_t>(i)] = v;
                ++hit[static_cast<size_t>(j) * k + i];
            }
        }
    }
    DominationDigraph dd(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                dd.set_edge(i, j,
                            hit[static_cast<size_t>(j) * k + i] ==
                                static_cast<int>(p.blocks[static_cast<size_t>(j)].size()));
    return dd;
}

std::string_view to_string(Kind k) {
    switch (k) {
    case Kind::UpperDomatic: return "upper-domatic";
    case Kind::Transitive: return "transitive";
    case Kind::Domatic: return "domatic";
    case Kind::Grundy: return "grundy";
    }
    return "?";
}

Kind parse_kind(std::string_view text) {
    for (Kind k : {Kind::UpperDomatic, Kind::Transitive, Kind::Domatic, Kind::Grundy})
        if (text == to_string(k))
            return k;
    throw ContractError("unknown partition kind '" + std::string(text) + "'");
}

bool is_upper_domatic(const DominationDigraph &dd) {
    for (int i = 0; i < dd.order(); ++i)
        for (int j = i + 1; j < dd.order(); ++j)
            if (!dd.edge(i, j) && !dd.edge(j, i))
                return false;
    return true;
}

bool is_transitive(const DominationDigraph &dd) {
    for (int i = 0; i < dd.order(); ++i)
        for (int j = i + 1; j < dd.order(); ++j)
            if (!dd.edge(i, j))
                return false;
    return true;
}

PartitionKind classify_partition(const Graph &g, const VertexPartition &p) {
    auto dd = domination_digraph(g, p);
    PartitionKind out;
    out.upper_domatic = is_upper_domatic(dd);
    out.transitive = is_transitive(dd);
    out.domatic = std::all_of(p.blocks.begin(), p.blocks.end(),
                              [&](const auto &b) { return is_dominating_set(g, b); });
    bool independent = true;
    for (const auto &b : p.blocks)
        for (size_t i = 0; i < b.size() && independent; ++i)
            for (size_t j = i + 1; j < b.size() && independent; ++j)
                independent = !g.adjacent(b[i], b[j]);
    out.grundy = out.transitive && independent;
    return out;
}

bool has_kind(const PartitionKind &flags, Kind k) {
    switch (k) {
    case Kind::UpperDomatic: return flags.upper_domatic;
    case Kind::Transitive: return flags.transitive;
    case Kind::Domatic: return flags.domatic;
    case Kind::Grundy: return flags.grundy;
    }
    return false;
}

std::vector<int> in_degrees(const DominationDigraph &dd) {
    std::vector<int> out(static_cast<size_t>(dd.order()), 0);
    for (int i = 0; i < dd.order(); ++i)
        for (int j = 0; j < dd.order(); ++j)
            out[static_cast<size_t>(j)] += dd.edge(i, j);
    return out;
}

std::vector<int> out_degrees(const DominationDigraph &dd) {
    std::vector<int> out(static_cast<size_t>(dd.order()), 0);
    for (int i = 0; i < dd.order(); ++i)
        for (int j = 0; j < dd.order(); ++j)
            out[static_cast<size_t>(i)] += dd.edge(i, j);
    return out;
}

std::vector<int> sources(const DominationDigraph &dd) {
    std::vector<int> out;
    auto deg = out_degrees(dd);
    for (int i = 0; i < dd.order(); ++i)
        if (deg[static_cast<size_t>(i)] == dd.order() - 1)
            out.push_back(i);
    return out;
}

std::vector<int> sinks(const DominationDigraph &dd) {
    std::vector<int> out;
    auto deg = in_degrees(dd);
    for (int i = 0; i < dd.order(); ++i)
        if (deg[static_cast<size_t>(i)] == dd.order() - 1)
            out.push_back(i);
    return out;
}

VertexPartition merge_blocks(const VertexPartition &p, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= p.order() || j >= p.order())
        throw ContractError("merge_blocks: invalid block indices");
    if (i > j)
        std::swap(i, j);
    VertexPartition out = p;
    auto &dst = out.blocks[static_cast<size_t>(i)];
    const auto &src = p.blocks[static_cast<size_t>(j)];
    dst.insert(dst.end(), src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
    out.blocks.erase(out.blocks.begin() + j);
    return out;
}

} // namespace updom
