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

#include "updom/solve.hpp"

#include "updom/cobip.hpp"
#include "updom/error.hpp"
#include "updom/split_solver.hpp"
#include "updom/tree_solver.hpp"
#include "updom/unicyclic.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace updom {

std::string_view to_string(Method m) {
    switch (m) {
    case Method::Auto: return "auto";
    case Method::Oracle: return "oracle";
    case Method::Tree: return "tree";
    case Method::Unicyclic: return "unicyclic";
    case Method::Split: return "split";
    case Method::Cobip: return "cobip";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    for (Method m : {Method::Auto, Method::Oracle, Method::Tree, Method::Unicyclic, Method::Split,
                     Method::Cobip})
        if (to_string(m) == text)
            return m;
    throw ContractError("unknown method '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

namespace {

bool is_forest(const Graph &g) {
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

void guard_cap(const Graph &g, const SolveOptions &options) {
    if (g.order() > kOracleHardLimit)
        throw SizeCapError("exhaustive search supports at most " + std::to_string(kOracleHardLimit) +
                           " vertices");
    if (!options.force && g.order() > options.oracle_cap)
        throw SizeCapError("exhaustive search refuses n = " + std::to_string(g.order()) + " > " +
                           std::to_string(options.oracle_cap) + " without --force");
}

struct Solved {
    Method method;
    SolveResult result;
    bool transitive_witness = true;
    std::optional<int> transitivity;
};

Solved run_method(const Graph &g, Method method, const SolveOptions &options) {
    Solved s{method, {}, true, std::nullopt};
    switch (method) {
    case Method::Split: {
        auto cert = recognize_split(g);
        if (!cert)
            throw ClassMismatchError("graph is not split");
        s.result = upper_domatic_split(g, *cert);
        s.transitive_witness = classify_partition(g, s.result.witness).transitive;
        break;
    }
    case Method::Tree:
        if (!is_forest(g))
            throw ClassMismatchError("graph is not a forest");
        s.result = transitivity_tree(g);
        break;
    case Method::Unicyclic:
        if (!recognize_unicyclic(g))
            throw ClassMismatchError("graph is not unicyclic");
        s.result = transitivity_unicyclic(g);
        break;
    case Method::Cobip:
        if (!is_cobipartite(g))
            throw ClassMismatchError("graph is not co-bipartite");
        guard_cap(g, options);
        s.result = upper_domatic_cobipartite(g);
        break;
    case Method::Oracle: {
        guard_cap(g, options);
        s.result = upper_domatic_bf(g);
        s.transitive_witness = classify_partition(g, s.result.witness).transitive;
        s.transitivity = transitivity_bf(g).value;
        return s;
    }
    case Method::Auto:
        throw ContractError("run_method: auto is resolved by the caller");
    }
    s.transitivity = s.result.value;
    return s;
}

/// First class solver that accepts g, in priority order; Oracle when none.
Method pick_method(const Graph &g) {
    if (recognize_split(g))
        return Method::Split;
    if (is_forest(g))
        return Method::Tree;
    if (recognize_unicyclic(g))
        return Method::Unicyclic;
    if (is_cobipartite(g))
        return Method::Cobip;
    return Method::Oracle;
}

} // namespace

SolveReport solve(const Graph &g, const SolveOptions &options) {
    SolveReport report;
    report.n = g.order();
    report.m = g.size();
    report.classes = classify(g).tags;
    if (g.order() == 0) {
        report.method = std::string(to_string(options.method == Method::Auto ? Method::Oracle : options.method));
        report.transitivity = 0;
        report.witness_transitive = true;
        return report;
    }
    Method method = options.method;
    if (method == Method::Auto)
        method = pick_method(g);
    const auto comps = components(g);
    if (options.method == Method::Auto && method == Method::Oracle && comps.size() > 1) {
        // Tr = D on each class-solved component; Tr is additive by maximum and
        // D of a disjoint union never exceeds the largest component value.
        std::vector<Method> picks;
        for (const auto &c : comps)
            picks.push_back(pick_method(g.induced(c)));
        if (std::none_of(picks.begin(), picks.end(), [](Method m) { return m == Method::Oracle; })) {
            std::vector<int> labels(static_cast<size_t>(g.order()), 1);
            int best = 0;
            for (size_t i = 0; i < comps.size(); ++i) {
                auto solved = run_method(g.induced(comps[i]), picks[i], options);
                report.component_methods.emplace_back(to_string(picks[i]));
                if (solved.result.value <= best)
                    continue;
                // Keep only transitive witnesses so the other components can
                // join the first block.
                if (!solved.transitive_witness)
                    solved.result = transitivity_bf(g.induced(comps[i]));
                best = solved.result.value;
                std::fill(labels.begin(), labels.end(), 1);
                for (int b = 0; b < solved.result.witness.order(); ++b)
                    for (Vertex v : solved.result.witness.blocks[static_cast<size_t>(b)])
                        labels[static_cast<size_t>(comps[i][static_cast<size_t>(v)])] = b + 1;
            }
            report.method = "components";
            report.upper_domatic = best;
            report.transitivity = best;
            report.witness = partition_from_labeling(labels);
            report.witness_transitive = true;
            return report;
        }
    }
    auto solved = run_method(g, method, options);
    report.method = std::string(to_string(solved.method));
    report.upper_domatic = solved.result.value;
    report.transitivity = solved.transitivity;
    report.witness = solved.result.witness;
    report.witness_transitive = solved.transitive_witness;
    return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

nlohmann::json vertex_json(const Graph &g, Vertex v) {
    const std::string name = g.label(v);
    if (!name.empty() && std::all_of(name.begin(), name.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        return std::stoll(name);
    return name;
}

nlohmann::json partition_json(const Graph &g, const VertexPartition &p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto &b : p.blocks) {
        nlohmann::json block = nlohmann::json::array();
        for (Vertex v : b)
            block.push_back(vertex_json(g, v));
        blocks.push_back(block);
    }
    return blocks;
}

std::string class_list(const std::vector<GraphClass> &classes) {
    std::string out;
    for (auto c : classes)
        out += (out.empty() ? "" : ",") + std::string(to_string(c));
    return out;
}

} // namespace

std::string partition_text_for(const Graph &g, const VertexPartition &p) {
    std::string out;
    for (const auto &b : p.blocks) {
        for (size_t i = 0; i < b.size(); ++i)
            out += (i ? " " : "") + g.label(b[i]);
        out += '\n';
    }
    return out;
}

VertexPartition parse_partition_for(const Graph &g, std::string_view text) {
    auto raw = parse_partition(text);
    if (!g.labels().empty()) {
        std::map<std::string, Vertex> by_name;
        for (int v = 0; v < g.order(); ++v)
            by_name[g.label(v)] = v;
        for (auto &b : raw.blocks)
            for (auto &v : b) {
                auto it = by_name.find(std::to_string(v));
                if (it == by_name.end())
                    throw ParseError("unknown vertex " + std::to_string(v));
                v = it->second;
            }
    }
    try {
        validate(g, raw);
    } catch (const ContractError &e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
    return raw;
}

std::string to_text(const Graph &g, const SolveReport &r) {
    std::ostringstream out;
    out << "n: " << r.n << "\nm: " << r.m << "\nclasses: " << class_list(r.classes) << "\nmethod: " << r.method;
    if (!r.component_methods.empty()) {
        out << " (";
        for (size_t i = 0; i < r.component_methods.size(); ++i)
            out << (i ? "," : "") << r.component_methods[i];
        out << ")";
    }
    out << "\nD: " << r.upper_domatic << "\n";
    if (r.transitivity)
        out << "Tr: " << *r.transitivity << "\n";
    out << "witness (" << (r.witness_transitive ? "transitive" : "upper-domatic") << "):\n";
    for (size_t b = 0; b < r.witness.blocks.size(); ++b) {
        out << "  V" << b + 1 << ":";
        for (Vertex v : r.witness.blocks[b])
            out << " " << g.label(v);
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Graph &g, const SolveReport &r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    nlohmann::json classes = nlohmann::json::array();
    for (auto c : r.classes)
        classes.push_back(std::string(to_string(c)));
    j["classes"] = classes;
    j["method"] = r.method;
    if (!r.component_methods.empty())
        j["component_methods"] = r.component_methods;
    j["D"] = r.upper_domatic;
    j["Tr"] = r.transitivity ? nlohmann::json(*r.transitivity) : nlohmann::json(nullptr);
    j["witness"] = partition_json(g, r.witness);
    j["witness_kind"] = r.witness_transitive ? "transitive" : "upper-domatic";
    return j.dump();
}

CheckReport check_partition(const Graph &g, const VertexPartition &p) {
    CheckReport r;
    r.digraph = domination_digraph(g, p);
    r.kinds = classify_partition(g, p);
    r.sources = sources(r.digraph);
    r.sinks = sinks(r.digraph);
    r.in_degrees = in_degrees(r.digraph);
    return r;
}

std::string to_text(const CheckReport &r) {
    std::ostringstream out;
    const int k = r.digraph.order();
    out << "digraph (row i, column j: V_i dominates V_j):\n";
    for (int a = 0; a < k; ++a) {
        out << "  V" << a + 1 << ":";
        for (int b = 0; b < k; ++b)
            out << ' ' << (a == b ? '-' : (r.digraph.edge(a, b) ? '1' : '0'));
        out << "\n";
    }
    auto flag = [](bool x) { return x ? "yes" : "no"; };
    out << "upper-domatic: " << flag(r.kinds.upper_domatic) << "\ntransitive: " << flag(r.kinds.transitive)
        << "\ndomatic: " << flag(r.kinds.domatic) << "\ngrundy: " << flag(r.kinds.grundy) << "\n";
    auto list = [&](const char *name, const std::vector<int> &xs, int shift) {
        out << name << ":";
        for (int x : xs)
            out << ' ' << x + shift;
        out << "\n";
    };
    list("sources", r.sources, 1);
    list("sinks", r.sinks, 1);
    list("in-degrees", r.in_degrees, 0);
    return out.str();
}

std::string to_json(const CheckReport &r) {
    nlohmann::json j;
    std::vector<std::string> rows;
    for (int a = 0; a < r.digraph.order(); ++a) {
        std::string row;
        for (int b = 0; b < r.digraph.order(); ++b)
            row += r.digraph.edge(a, b) ? '1' : '0';
        rows.push_back(row);
    }
    j["digraph"] = rows;
    j["upper_domatic"] = r.kinds.upper_domatic;
    j["transitive"] = r.kinds.transitive;
    j["domatic"] = r.kinds.domatic;
    j["grundy"] = r.kinds.grundy;
    std::vector<int> src, snk;
    for (int x : r.sources)
        src.push_back(x + 1);
    for (int x : r.sinks)
        snk.push_back(x + 1);
    j["sources"] = src;
    j["sinks"] = snk;
    j["in_degrees"] = r.in_degrees;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Generation and hunting
// ---------------------------------------------------------------------------

std::vector<Graph> generate(std::string_view family, int n, std::uint64_t seed, int count) {
    if (count < 1)
        throw ContractError("count must be at least 1");
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        if (family == "path")
            out.push_back(path_graph(n));
        else if (family == "cycle")
            out.push_back(cycle_graph(n));
        else if (family == "complete")
            out.push_back(complete_graph(n));
        else if (family == "star")
            out.push_back(star_graph(n));
        else if (family == "tree")
            out.push_back(random_tree(n, s));
        else if (family == "unicyclic")
            out.push_back(random_unicyclic(n, s));
        else if (family == "split")
            out.push_back(random_split(n, s));
        else if (family == "chain") {
            if (n < 2)
                throw ContractError("chain graphs need n >= 2");
            out.push_back(random_bipartite_chain(n / 2, n - n / 2, s));
        } else
            throw ContractError("unknown family '" + std::string(family) + "'");
    }
    return out;
}

std::vector<Graph> hunt_stream(std::string_view source, int n_lo, int n_hi, std::uint64_t seed, int count) {
    std::vector<Graph> out;
    for (int n = std::max(n_lo, 0); n <= n_hi; ++n) {
        if (source == "exhaustive") {
            if (n > 8)
                throw ContractError("exhaustive streams support n <= 8");
            const auto &all = nonisomorphic_graphs(n);
            out.insert(out.end(), all.begin(), all.end());
        } else if (source == "random") {
            for (int i = 0; i < count; ++i)
                out.push_back(random_gnp(n, 0.5, seed + static_cast<std::uint64_t>(n) * 1000003u + static_cast<std::uint64_t>(i)));
        } else if (source == "complete") {
            if (n >= 1)
                out.push_back(complete_graph(n));
        } else if (source == "empty") {
            out.push_back(empty_graph(n));
        } else {
            throw ContractError("unknown source '" + std::string(source) + "'");
        }
    }
    return out;
}

HuntSummary run_hunt(const std::vector<Graph> &stream, int workers, const HuntOptions &options) {
    HuntSummary s;
    s.records = conjecture_hunt(stream, workers, options);
    std::map<int, std::pair<int, int>> by_d; // D -> (sink, no sink)
    int skipped = 0;
    for (const auto &r : s.records) {
        if (r.flag == "SKIPPED") {
            ++skipped;
            continue;
        }
        auto &slot = by_d[r.upper_domatic];
        (r.sink_exists ? slot.first : slot.second)++;
        s.counterexamples += r.flag == "COUNTEREXAMPLE" || r.flag == "VIOLATION";
    }
    std::ostringstream out;
    out << "graphs: " << s.records.size() << " (skipped " << skipped << ")\n";
    for (const auto &[d, counts] : by_d)
        out << "D=" << d << ": sink_exists=true " << counts.first << ", sink_exists=false " << counts.second << "\n";
    out << "counterexamples: " << s.counterexamples << "\n";
    s.text = out.str();
    return s;
}

// ---------------------------------------------------------------------------
// Selftest
// ---------------------------------------------------------------------------

SelftestResult selftest(const SelftestOptions &options) {
    SelftestResult result;
    std::ostringstream log;
    const int top = options.quick ? 6 : 7;
    bool fault_pending = options.inject_fault;
    auto suite = [&](const char *name, auto accept, auto fast) {
        int graphs = 0, bad = 0;
        for (int n = 1; n <= top; ++n)
            for (const auto &g : nonisomorphic_graphs(n)) {
                if (!accept(g))
                    continue;
                ++graphs;
                int value = fast(g);
                if (fault_pending) {
                    ++value;
                    fault_pending = false;
                }
                const int tr = transitivity_bf(g).value;
                const int d = upper_domatic_bf(g).value;
                if (value != tr || value != d) {
                    ++bad;
                    log << "MISMATCH in " << name << ": solver " << value << ", Tr " << tr << ", D " << d
                        << "\n" << to_edge_list(g);
                }
            }
        log << name << ": " << graphs << " graphs, " << (bad ? "FAIL" : "ok") << "\n";
        result.passed = result.passed && bad == 0;
    };
    suite("tree", [](const Graph &g) { return is_tree(g); },
          [](const Graph &g) { return transitivity_tree(g).value; });
    suite("unicyclic", [](const Graph &g) { return recognize_unicyclic(g).has_value(); },
          [](const Graph &g) { return transitivity_unicyclic(g).value; });
    suite("split", [](const Graph &g) { return recognize_split(g).has_value(); },
          [](const Graph &g) { return upper_domatic_split(g).value; });
    suite("cobip", [](const Graph &g) { return is_cobipartite(g); },
          [](const Graph &g) { return upper_domatic_cobipartite(g).value; });

    // Auto dispatch against the oracle, with the witness round trip.
    int graphs = 0, bad = 0;
    for (int n = 1; n <= top; ++n)
        for (const auto &g : nonisomorphic_graphs(n)) {
            ++graphs;
            auto fast = solve(g);
            SolveOptions oracle;
            oracle.method = Method::Oracle;
            auto slow = solve(g, oracle);
            const bool round_trip = classify_partition(g, parse_partition_for(g, partition_text_for(g, fast.witness))).upper_domatic &&
                                    fast.witness.order() == fast.upper_domatic;
            if (fast.upper_domatic != slow.upper_domatic || !round_trip) {
                ++bad;
                log << "MISMATCH in auto-vs-oracle: auto " << fast.upper_domatic << " via " << fast.method
                    << ", oracle " << slow.upper_domatic << "\n" << to_edge_list(g);
            }
        }
    log << "auto-vs-oracle: " << graphs << " graphs, " << (bad ? "FAIL" : "ok") << "\n";
    result.passed = result.passed && bad == 0;
    result.log = log.str();
    return result;
}

} // namespace updom
