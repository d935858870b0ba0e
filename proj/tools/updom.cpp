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

// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 failed check or internal error, 2 parse or usage
// error, 3 method/class mismatch, 4 exhaustive-search size cap exceeded.

#include "updom/updom.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitCap = 4;

int exit_code(updom_status status) {
    switch (status) {
    case UPDOM_OK: return 0;
    case UPDOM_ERR_PARSE:
    case UPDOM_ERR_CONTRACT:
    case UPDOM_ERR_IO: return kExitParse;
    case UPDOM_ERR_CLASS_MISMATCH: return kExitClass;
    case UPDOM_ERR_SIZE_CAP: return kExitCap;
    default: return kExitFail;
    }
}

int report(updom_status status) {
    std::cerr << "updom: " << updom_status_name(status) << ": " << updom_last_error() << "\n";
    return exit_code(status);
}

struct GraphDeleter {
    void operator()(updom_graph *g) const { updom_graph_destroy(g); }
};
struct PartitionDeleter {
    void operator()(updom_partition *p) const { updom_partition_destroy(p); }
};
struct SolutionDeleter {
    void operator()(updom_solution *s) const { updom_solution_destroy(s); }
};
struct CheckDeleter {
    void operator()(updom_check *c) const { updom_check_destroy(c); }
};
using GraphPtr = std::unique_ptr<updom_graph, GraphDeleter>;

/// Takes ownership of a library string.
std::string take(char *text) {
    std::string out = text ? text : "";
    updom_string_free(text);
    return out;
}

std::optional<std::string> read_source(const std::string &path, bool from_stdin) {
    std::ostringstream buffer;
    if (from_stdin) {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    buffer << in.rdbuf();
    return buffer.str();
}

updom_format format_of(const std::string &name) {
    if (name == "edgelist")
        return UPDOM_FORMAT_EDGELIST;
    if (name == "dimacs")
        return UPDOM_FORMAT_DIMACS;
    return UPDOM_FORMAT_AUTO;
}

int load_graph(const std::string &path, bool from_stdin, const std::string &format, GraphPtr &out) {
    auto text = read_source(path, from_stdin);
    if (!text) {
        std::cerr << "updom: cannot read '" << path << "'\n";
        return kExitParse;
    }
    updom_graph *raw = nullptr;
    if (auto st = updom_graph_parse(text->c_str(), format_of(format), &raw); st != UPDOM_OK)
        return report(st);
    out.reset(raw);
    return 0;
}

struct SolveArgs {
    std::string input;
    bool from_stdin = false;
    std::string format = "auto";
    std::string method = "auto";
    bool json = false;
    bool force = false;
};

int run_solve(const SolveArgs &args) {
    if (args.input.empty() && !args.from_stdin) {
        std::cerr << "updom: solve needs --input or --stdin\n";
        return kExitParse;
    }
    GraphPtr graph;
    if (int rc = load_graph(args.input, args.from_stdin, args.format, graph))
        return rc;
    updom_solution *raw = nullptr;
    if (auto st = updom_solve(graph.get(), args.method.c_str(), args.force ? 1 : 0, &raw); st != UPDOM_OK)
        return report(st);
    std::unique_ptr<updom_solution, SolutionDeleter> solution(raw);
    char *text = nullptr;
    auto st = args.json ? updom_solution_json(solution.get(), &text) : updom_solution_text(solution.get(), &text);
    if (st != UPDOM_OK)
        return report(st);
    std::cout << take(text) << (args.json ? "\n" : "");
    return 0;
}

struct CheckArgs {
    std::string graph;
    std::string partition;
    std::string kind = "upper-domatic";
    std::string format = "auto";
    bool json = false;
};

int run_check(const CheckArgs &args) {
    GraphPtr graph;
    if (int rc = load_graph(args.graph, false, args.format, graph))
        return rc;
    auto text = read_source(args.partition, false);
    if (!text) {
        std::cerr << "updom: cannot read '" << args.partition << "'\n";
        return kExitParse;
    }
    updom_partition *raw_partition = nullptr;
    if (auto st = updom_partition_parse(graph.get(), text->c_str(), &raw_partition); st != UPDOM_OK)
        return report(st);
    std::unique_ptr<updom_partition, PartitionDeleter> partition(raw_partition);
    updom_check *raw_check = nullptr;
    if (auto st = updom_check_partition(graph.get(), partition.get(), &raw_check); st != UPDOM_OK)
        return report(st);
    std::unique_ptr<updom_check, CheckDeleter> check(raw_check);
    int holds = 0;
    if (auto st = updom_check_has_kind(check.get(), args.kind.c_str(), &holds); st != UPDOM_OK)
        return report(st);
    char *out = nullptr;
    auto st = args.json ? updom_check_json(check.get(), &out) : updom_check_text(check.get(), &out);
    if (st != UPDOM_OK)
        return report(st);
    std::cout << take(out) << (args.json ? "\n" : "");
    std::cout << args.kind << ": " << (holds ? "holds" : "does not hold") << "\n";
    return holds ? 0 : kExitFail;
}

struct GenArgs {
    std::string family;
    int n = 0;
    std::uint64_t seed = 1;
    int count = 1;
    std::string out_dir;
};

int run_gen(const GenArgs &args) {
    if (args.count < 1) {
        std::cerr << "updom: --count must be at least 1\n";
        return kExitParse;
    }
    if (!args.out_dir.empty())
        std::filesystem::create_directories(args.out_dir);
    for (int i = 0; i < args.count; ++i) {
        const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
        updom_graph *raw = nullptr;
        if (auto st = updom_graph_generate(args.family.c_str(), args.n, seed, &raw); st != UPDOM_OK)
            return report(st);
        GraphPtr graph(raw);
        char *text = nullptr;
        if (auto st = updom_graph_edge_list(graph.get(), &text); st != UPDOM_OK)
            return report(st);
        const std::string body = take(text);
        if (args.out_dir.empty()) {
            if (args.count > 1)
                std::cout << "# " << args.family << " n=" << args.n << " seed=" << seed << "\n";
            std::cout << body;
        } else {
            const auto path = std::filesystem::path(args.out_dir) /
                              (args.family + "_n" + std::to_string(args.n) + "_s" + std::to_string(seed) + ".txt");
            std::ofstream out(path);
            out << body;
            if (!out) {
                std::cerr << "updom: cannot write " << path << "\n";
                return kExitParse;
            }
        }
    }
    return 0;
}

struct HuntArgs {
    std::string range = "4..6";
    std::string source = "exhaustive";
    std::uint64_t seed = 1;
    int count = 100;
    int workers = 1;
    std::string out;
};

int run_hunt(const HuntArgs &args) {
    const auto dots = args.range.find("..");
    int lo = 0, hi = -1;
    try {
        if (dots == std::string::npos)
            throw std::invalid_argument("range");
        lo = std::stoi(args.range.substr(0, dots));
        hi = std::stoi(args.range.substr(dots + 2));
    } catch (const std::exception &) {
        std::cerr << "updom: --n-range expects a..b\n";
        return kExitParse;
    }
    char *summary = nullptr;
    int counterexamples = 0;
    auto st = updom_hunt(args.source.c_str(), lo, hi, args.seed, args.count, args.workers,
                         args.out.empty() ? nullptr : args.out.c_str(), &summary, &counterexamples);
    if (st != UPDOM_OK)
        return report(st);
    std::cout << take(summary);
    return 0;
}

int run_selftest(bool quick, bool inject_fault) {
    int passed = 0;
    char *log = nullptr;
    if (auto st = updom_selftest(quick ? 1 : 0, inject_fault ? 1 : 0, &passed, &log); st != UPDOM_OK)
        return report(st);
    std::cout << take(log) << (passed ? "selftest: PASS\n" : "selftest: FAIL\n");
    return passed ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Upper domatic number, transitivity and sink-set tools"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "Compute D(G) and a witness partition");
    auto *input_opt = solve_cmd->add_option("--input", solve.input, "Graph file");
    auto *stdin_opt = solve_cmd->add_flag("--stdin", solve.from_stdin, "Read the graph from standard input");
    input_opt->excludes(stdin_opt);
    solve_cmd->add_option("--format", solve.format, "Input format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    solve_cmd->add_option("--method", solve.method, "Solver")
        ->check(CLI::IsMember({"auto", "oracle", "tree", "unicyclic", "split", "cobip"}));
    solve_cmd->add_flag("--json", solve.json, "Print one JSON object");
    solve_cmd->add_flag("--force", solve.force, "Allow exhaustive search above the size cap");

    CheckArgs check;
    auto *check_cmd = app.add_subcommand("check", "Inspect a partition of a graph");
    check_cmd->add_option("--graph", check.graph, "Graph file")->required();
    check_cmd->add_option("--partition", check.partition, "Partition file, one block per line")->required();
    check_cmd->add_option("--kind", check.kind, "Property whose truth sets the exit code")
        ->check(CLI::IsMember({"upper-domatic", "transitive", "domatic", "grundy"}));
    check_cmd->add_option("--format", check.format, "Graph format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    check_cmd->add_flag("--json", check.json, "Print one JSON object");

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate graphs as edge lists");
    gen_cmd->add_option("family", gen.family, "path|cycle|complete|star|tree|unicyclic|split|chain")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "star", "tree", "unicyclic", "split", "chain"}));
    gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
    gen_cmd->add_option("--seed", gen.seed, "Seed of the first graph");
    gen_cmd->add_option("--count", gen.count, "Number of graphs");
    gen_cmd->add_option("--out-dir", gen.out_dir, "Write one file per graph here instead of stdout");

    HuntArgs hunt;
    auto *hunt_cmd = app.add_subcommand("hunt", "Search for graphs without a sink-bearing D-partition");
    hunt_cmd->add_option("--n-range", hunt.range, "Orders a..b");
    hunt_cmd->add_option("--source", hunt.source, "Graph stream")
        ->check(CLI::IsMember({"exhaustive", "random", "complete", "empty"}));
    hunt_cmd->add_option("--seed", hunt.seed, "Seed for random streams");
    hunt_cmd->add_option("--count", hunt.count, "Random graphs per order");
    hunt_cmd->add_option("--workers", hunt.workers, "Worker threads")->check(CLI::PositiveNumber);
    hunt_cmd->add_option("--out", hunt.out, "JSON lines report");

    bool quick = false, inject_fault = false;
    auto *self_cmd = app.add_subcommand("selftest", "Cross-check every solver against exhaustive search");
    self_cmd->add_flag("--quick", quick, "Stop at n = 6");
    self_cmd->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    if (solve_cmd->parsed())
        return run_solve(solve);
    if (check_cmd->parsed())
        return run_check(check);
    if (gen_cmd->parsed())
        return run_gen(gen);
    if (hunt_cmd->parsed())
        return run_hunt(hunt);
    return run_selftest(quick, inject_fault);
}
