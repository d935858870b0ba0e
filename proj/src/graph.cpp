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

#include "updom/graph.hpp"

#include "updom/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace updom {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int n) {
    if (n < 0)
        throw ContractError("graph order must be non-negative");
    adj_.resize(static_cast<size_t>(n));
    if (n <= kMaskLimit)
        masks_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw ContractError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    size_t degree_sum = 0;
    for (auto &list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    g.m_ = static_cast<int>(degree_sum / 2);
    if (n <= kMaskLimit) {
        for (int v = 0; v < n; ++v)
            for (Vertex w : g.adj_[static_cast<size_t>(v)])
                g.masks_[static_cast<size_t>(v)] |= std::uint64_t{1} << w;
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (has_masks() && order() > 0)
        return (masks_[static_cast<size_t>(u)] >> v) & 1U;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto &list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty())
        return 0;
    int best = order();
    for (const auto &list : adj_)
        best = std::min(best, static_cast<int>(list.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<int> index(static_cast<size_t>(order()), -1);
    for (size_t i = 0; i < keep.size(); ++i)
        index[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : neighbors(keep[i])) {
            int j = index[static_cast<size_t>(w)];
            if (j > static_cast<int>(i))
                sub.emplace_back(static_cast<int>(i), j);
        }
    Graph out = from_edges(static_cast<int>(keep.size()), sub);
    if (!labels_.empty()) {
        std::vector<std::string> names;
        for (Vertex v : keep)
            names.push_back(labels_[static_cast<size_t>(v)]);
        out.labels_ = std::move(names);
    }
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != order())
        throw ContractError("label count does not match graph order");
    labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty())
        return std::to_string(v);
    return labels_[static_cast<size_t>(v)];
}

Graph complement(const Graph &g) {
    std::vector<Edge> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                out.emplace_back(u, v);
    Graph c = Graph::from_edges(n, out);
    c.set_labels(g.labels());
    return c;
}

std::vector<std::vector<Vertex>> components(const Graph &g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)])
            continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph &g) { return g.order() <= 1 || components(g).size() == 1; }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

long long to_integer(std::string_view tok, int line, const char *what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(std::string("expected non-negative integer for ") + what + ", got '" +
                             std::string(tok) + "'",
                         line);
    if (value > 1'000'000'000)
        throw ParseError(std::string(what) + " too large", line);
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared = -1;
    int max_label = -1;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        auto toks = split_tokens(strip_comment(lines[i]));
        if (toks.empty())
            continue;
        if (toks[0] == "n") {
            if (toks.size() != 2)
                throw ParseError("header must be 'n <count>'", lineno);
            if (declared >= 0 || !edges.empty())
                throw ParseError("'n' header must come first and only once", lineno);
            declared = static_cast<int>(to_integer(toks[1], lineno, "vertex count"));
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("expected 'u v', got " + std::to_string(toks.size()) + " tokens",
                             lineno);
        int u = static_cast<int>(to_integer(toks[0], lineno, "vertex"));
        int v = static_cast<int>(to_integer(toks[1], lineno, "vertex"));
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
        if (declared >= 0 && (u >= declared || v >= declared))
            throw ParseError("vertex index out of range for n=" + std::to_string(declared),
                             lineno);
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }
    const int n = declared >= 0 ? declared : max_label + 1;
    return Graph::from_edges(n, edges);
}

Graph parse_dimacs(std::string_view text) {
    std::vector<Edge> edges;
    int n = -1;
    long long declared_m = -1;
    auto lines = split_lines(text);
    for (size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        auto toks = split_tokens(lines[i]);
        if (toks.empty() || toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", lineno);
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError("problem line must be 'p edge <n> <m>'", lineno);
            n = static_cast<int>(to_integer(toks[2], lineno, "vertex count"));
            declared_m = to_integer(toks[3], lineno, "edge count");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0)
                throw ParseError("edge line before problem line", lineno);
            if (toks.size() != 3)
                throw ParseError("edge line must be 'e <u> <v>'", lineno);
            long long u = to_integer(toks[1], lineno, "vertex");
            long long v = to_integer(toks[2], lineno, "vertex");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("vertex index out of range 1.." + std::to_string(n), lineno);
            if (u == v)
                throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("unrecognized line type '" + std::string(toks[0]) + "'", lineno);
    }
    if (n < 0)
        throw ParseError("missing problem line 'p edge <n> <m>'");
    Graph g = Graph::from_edges(n, edges);
    if (g.size() != declared_m)
        throw ParseError("declared " + std::to_string(declared_m) + " edges but found " +
                         std::to_string(g.size()));
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v)
        names.push_back(std::to_string(v + 1));
    g.set_labels(std::move(names));
    return g;
}

Graph parse_graph_auto(std::string_view text) {
    for (auto line : split_lines(text)) {
        auto toks = split_tokens(strip_comment(line));
        if (toks.empty())
            continue;
        if (toks[0] == "p" || toks[0] == "c" || toks[0] == "e")
            return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph &g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

std::string_view to_string(GraphClass c) {
    switch (c) {
    case GraphClass::Tree: return "Tree";
    case GraphClass::Unicyclic: return "Unicyclic";
    case GraphClass::Split: return "Split";
    case GraphClass::BipartiteChain: return "BipartiteChain";
    case GraphClass::CoBipartite: return "CoBipartite";
    case GraphClass::CoBipartiteChain: return "CoBipartiteChain";
    case GraphClass::TwoK2Free: return "TwoK2Free";
    case GraphClass::General: return "General";
    }
    return "?";
}

bool Classification::has(GraphClass c) const {
    return std::find(tags.begin(), tags.end(), c) != tags.end();
}

bool is_tree(const Graph &g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

std::optional<UnicyclicCertificate> recognize_unicyclic(const Graph &g) {
    const int n = g.order();
    if (n < 3 || g.size() != n || !is_connected(g))
        return std::nullopt;
    // Peel leaves; the 2-core of a connected graph with m = n is its cycle.
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<Vertex> stack;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] == 1)
            stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        removed[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1)
                stack.push_back(w);
    }
    Vertex start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (!removed[static_cast<size_t>(v)])
            start = v;
    UnicyclicCertificate cert;
    Vertex prev = -1;
    Vertex cur = start;
    do {
        cert.cycle.push_back(cur);
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (!removed[static_cast<size_t>(w)] && w != prev) {
                if (next < 0 || (prev < 0 && w < next))
                    next = w;
            }
        prev = cur;
        cur = next;
    } while (cur != start && cur >= 0);
    return cert;
}

void verify(const Graph &g, const SplitCertificate &cert) {
    std::vector<int> side(static_cast<size_t>(g.order()), -1);
    for (Vertex v : cert.clique)
        side[static_cast<size_t>(v)] = 1;
    for (Vertex v : cert.independent) {
        if (side[static_cast<size_t>(v)] != -1)
            throw VerificationError("split certificate sides overlap");
        side[static_cast<size_t>(v)] = 0;
    }
    if (std::count(side.begin(), side.end(), -1) != 0)
        throw VerificationError("split certificate does not cover V");
    for (size_t i = 0; i < cert.clique.size(); ++i)
        for (size_t j = i + 1; j < cert.clique.size(); ++j)
            if (!g.adjacent(cert.clique[i], cert.clique[j]))
                throw VerificationError("split certificate K is not a clique");
    for (size_t i = 0; i < cert.independent.size(); ++i)
        for (size_t j = i + 1; j < cert.independent.size(); ++j)
            if (g.adjacent(cert.independent[i], cert.independent[j]))
                throw VerificationError("split certificate S is not independent");
    if (cert.omega != static_cast<int>(cert.clique.size()))
        throw VerificationError("split certificate omega differs from |K|");
    for (Vertex s : cert.independent) {
        bool all = true;
        for (Vertex k : cert.clique)
            all = all && g.adjacent(s, k);
        if (all)
            throw VerificationError("split certificate K is not a maximum clique");
    }
}

std::optional<SplitCertificate> recognize_split(const Graph &g) {
    const int n = g.order();
    if (n == 0)
        return std::nullopt;
    std::vector<Vertex> by_degree(static_cast<size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // Hammer-Simeone: m = max{i : d_i >= i - 1} (1-based).
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_degree[static_cast<size_t>(i - 1)]) >= i - 1)
            m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(by_degree[static_cast<size_t>(i)]);
    if (head != static_cast<long long>(m) * (m - 1) + tail)
        return std::nullopt;

    SplitCertificate cert;
    cert.clique.assign(by_degree.begin(), by_degree.begin() + m);
    cert.independent.assign(by_degree.begin() + m, by_degree.end());
    // S is independent, so at most one of its vertices can see all of K.
    for (auto it = cert.independent.begin(); it != cert.independent.end(); ++it) {
        bool all = true;
        for (Vertex k : cert.clique)
            all = all && g.adjacent(*it, k);
        if (all) {
            cert.clique.push_back(*it);
            cert.independent.erase(it);
            break;
        }
    }
    std::sort(cert.clique.begin(), cert.clique.end());
    std::sort(cert.independent.begin(), cert.independent.end());
    cert.omega = static_cast<int>(cert.clique.size());
    verify(g, cert);
    return cert;
}

std::optional<Bipartition> bipartition(const Graph &g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] >= 0)
            continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < n; ++v)
        (color[static_cast<size_t>(v)] == 0 ? out.x : out.y).push_back(v);
    return out;
}

namespace {

bool nested_decreasing(const Graph &g, const std::vector<Vertex> &order) {
    for (size_t i = 1; i < order.size(); ++i) {
        auto big = g.neighbors(order[i - 1]);
        auto small = g.neighbors(order[i]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return false;
    }
    return true;
}

} // namespace

std::optional<ChainCertificate> recognize_bipartite_chain(const Graph &g) {
    auto sides = bipartition(g);
    if (!sides)
        return std::nullopt;
    auto by_degree_desc = [&](std::vector<Vertex> side) {
        std::stable_sort(side.begin(), side.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return side;
    };
    ChainCertificate cert{by_degree_desc(sides->x), by_degree_desc(sides->y)};
    if (!nested_decreasing(g, cert.x_order) || !nested_decreasing(g, cert.y_order))
        return std::nullopt;
    return cert;
}

bool is_2k2_free(const Graph &g) {
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                continue;
            if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d))
                return false;
        }
    }
    return true;
}

Classification classify(const Graph &g) {
    Classification out;
    if (is_tree(g))
        out.tags.push_back(GraphClass::Tree);
    if ((out.unicyclic = recognize_unicyclic(g)))
        out.tags.push_back(GraphClass::Unicyclic);
    if ((out.split = recognize_split(g)))
        out.tags.push_back(GraphClass::Split);
    if ((out.chain = recognize_bipartite_chain(g)))
        out.tags.push_back(GraphClass::BipartiteChain);
    Graph co = complement(g);
    if (g.order() > 0 && (out.cobipartite = bipartition(co))) {
        out.tags.push_back(GraphClass::CoBipartite);
        if ((out.cochain = recognize_bipartite_chain(co)))
            out.tags.push_back(GraphClass::CoBipartiteChain);
    }
    if (is_2k2_free(g))
        out.tags.push_back(GraphClass::TwoK2Free);
    out.tags.push_back(GraphClass::General);
    return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

void require_order(int n, int minimum, const char *what) {
    if (n < minimum)
        throw ContractError(std::string(what) + ": invalid size " + std::to_string(n) +
                            " (need n >= " + std::to_string(minimum) + ")");
}

Graph relabel_randomly(const Graph &g, std::mt19937_64 &rng) {
    std::vector<Vertex> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return Graph::from_edges(g.order(), edges);
}

int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

Graph path_graph(int n) {
    require_order(n, 1, "path");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    require_order(n, 3, "cycle");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    require_order(n, 1, "complete");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph star_graph(int n) {
    require_order(n, 1, "star");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(n, e);
}

Graph empty_graph(int n) {
    require_order(n, 0, "empty");
    return Graph(n);
}

Graph random_tree(int n, std::uint64_t seed) {
    require_order(n, 1, "tree");
    std::mt19937_64 rng(seed);
    if (n <= 2)
        return path_graph(n);
    std::vector<int> prufer(static_cast<size_t>(n - 2));
    for (auto &x : prufer)
        x = uniform_int(rng, 0, n - 1);
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : prufer)
        ++deg[static_cast<size_t>(x)];
    std::vector<Edge> e;
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[static_cast<size_t>(leaf)] == 1) {
                e.emplace_back(leaf, x);
                --deg[static_cast<size_t>(leaf)];
                --deg[static_cast<size_t>(x)];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1)
            (a < 0 ? a : b) = v;
    e.emplace_back(a, b);
    return Graph::from_edges(n, e);
}

Graph random_unicyclic(int n, std::uint64_t seed) {
    require_order(n, 3, "unicyclic");
    std::mt19937_64 rng(seed);
    const int k = uniform_int(rng, 3, n);
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    for (int v = k; v < n; ++v)
        e.emplace_back(v, uniform_int(rng, 0, v - 1));
    return relabel_randomly(Graph::from_edges(n, e), rng);
}

Graph random_split(int n, std::uint64_t seed) {
    require_order(n, 1, "split");
    std::mt19937_64 rng(seed);
    const int k = uniform_int(rng, 1, n);
    std::bernoulli_distribution coin(0.5);
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    for (int s = k; s < n; ++s)
        for (int i = 0; i < k; ++i)
            if (coin(rng))
                e.emplace_back(s, i);
    return relabel_randomly(Graph::from_edges(n, e), rng);
}

Graph random_bipartite_chain(int n1, int n2, std::uint64_t seed) {
    require_order(n1, 1, "chain side X");
    require_order(n2, 1, "chain side Y");
    std::mt19937_64 rng(seed);
    std::vector<int> reach(static_cast<size_t>(n1));
    for (auto &r : reach)
        r = uniform_int(rng, 0, n2);
    std::sort(reach.rbegin(), reach.rend());
    std::vector<Edge> e;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < reach[static_cast<size_t>(i)]; ++j)
            e.emplace_back(i, n1 + j);
    return relabel_randomly(Graph::from_edges(n1 + n2, e), rng);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    require_order(n, 0, "gnp");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

void for_each_labeled_graph(int n, const std::function<bool(const Graph &)> &fn) {
    require_order(n, 0, "all_graphs");
    if (n > 8)
        throw ContractError("labeled enumeration supports n <= 8");
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        edges.clear();
        for (size_t b = 0; b < pairs.size(); ++b)
            if ((bits >> b) & 1U)
                edges.push_back(pairs[b]);
        if (!fn(Graph::from_edges(n, edges)))
            return;
    }
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

namespace {

/// Color refinement by iterated (color, sorted neighbor colors) signatures.
/// Colors are ranks of signatures, so they are labeling-invariant.
std::vector<int> refine_colors(const Graph &g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        color[static_cast<size_t>(v)] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto &s = sig[static_cast<size_t>(v)];
            s.push_back(color[static_cast<size_t>(v)]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v))
                nb.push_back(color[static_cast<size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) -
                uniq.begin());
        if (static_cast<int>(uniq.size()) == classes)
            break;
        classes = static_cast<int>(uniq.size());
    }
    return color;
}

std::uint64_t code_for_order(const Graph &g, const std::vector<Vertex> &order) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            code = (code << 1) |
                   static_cast<std::uint64_t>(g.adjacent(order[static_cast<size_t>(i)],
                                                         order[static_cast<size_t>(j)]));
    return code;
}

} // namespace

std::uint64_t canonical_code(const Graph &g) {
    const int n = g.order();
    if (n > 11)
        throw ContractError("canonical_code supports n <= 11");
    if (n <= 1)
        return 0;
    auto color = refine_colors(g);
    // Group vertices by color; only permutations inside each group matter.
    std::map<int, std::vector<Vertex>> groups;
    for (int v = 0; v < n; ++v)
        groups[color[static_cast<size_t>(v)]].push_back(v);
    std::vector<std::vector<Vertex>> cells;
    for (auto &[c, members] : groups)
        cells.push_back(members);

    std::uint64_t best = 0;
    bool have = false;
    std::vector<Vertex> order;
    order.reserve(static_cast<size_t>(n));
    // Odometer over the permutations of every cell.
    std::function<void(size_t)> rec = [&](size_t cell) {
        if (cell == cells.size()) {
            std::uint64_t c = code_for_order(g, order);
            if (!have || c > best) {
                best = c;
                have = true;
            }
            return;
        }
        auto members = cells[cell];
        std::sort(members.begin(), members.end());
        do {
            order.insert(order.end(), members.begin(), members.end());
            rec(cell + 1);
            order.resize(order.size() - members.size());
        } while (std::next_permutation(members.begin(), members.end()));
    };
    rec(0);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> e;
    int bit = n * (n - 1) / 2 - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, --bit)
            if ((code >> bit) & 1U)
                e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

const std::vector<Graph> &nonisomorphic_graphs(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    if (n < 0 || n > 8)
        throw ContractError("nonisomorphic_graphs supports 0 <= n <= 8");
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(Graph(n));
    } else {
        // Extend every class on n-1 vertices by a new vertex in all ways.
        const auto &smaller = nonisomorphic_graphs(n - 1);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> codes;
        for (const Graph &h : smaller) {
            auto base = h.edges();
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (n - 1)); ++sub) {
                auto e = base;
                for (int v = 0; v < n - 1; ++v)
                    if ((sub >> v) & 1U)
                        e.emplace_back(v, n - 1);
                std::uint64_t c = canonical_code(Graph::from_edges(n, e));
                if (seen.insert(c).second)
                    codes.push_back(c);
            }
        }
        std::sort(codes.begin(), codes.end());
        for (auto c : codes)
            out.push_back(graph_from_code(n, c));
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(out)).first->second;
}

} // namespace updom
