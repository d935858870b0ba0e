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

#include "updom/error.hpp"
#include "updom/solve.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

struct updom_graph {
    updom::Graph graph;
};

struct updom_partition {
    updom::VertexPartition partition;
};

struct updom_solution {
    updom::Graph graph;
    updom::SolveReport report;
};

struct updom_check {
    updom::CheckReport report;
};

namespace {

thread_local std::string last_error;

updom_status fail(updom_status status, const char *message) {
    last_error = message;
    return status;
}

/// Runs `body`, mapping library exceptions to status codes.
template <typename Body> updom_status guarded(Body &&body) {
    try {
        body();
        last_error.clear();
        return UPDOM_OK;
    } catch (const updom::ParseError &e) {
        return fail(UPDOM_ERR_PARSE, e.what());
    } catch (const updom::ClassMismatchError &e) {
        return fail(UPDOM_ERR_CLASS_MISMATCH, e.what());
    } catch (const updom::ContractError &e) {
        return fail(UPDOM_ERR_CONTRACT, e.what());
    } catch (const updom::SizeCapError &e) {
        return fail(UPDOM_ERR_SIZE_CAP, e.what());
    } catch (const updom::VerificationError &e) {
        return fail(UPDOM_ERR_VERIFICATION, e.what());
    } catch (const std::bad_alloc &) {
        return fail(UPDOM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UPDOM_ERR_INTERNAL, e.what());
    }
}

char *copy_string(const std::string &text) {
    char *out = static_cast<char *>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool ok, const char *what) {
    if (!ok)
        throw updom::ContractError(what);
}

} // namespace

extern "C" {

const char *updom_last_error(void) { return last_error.c_str(); }

const char *updom_status_name(updom_status status) {
    switch (status) {
    case UPDOM_OK: return "ok";
    case UPDOM_ERR_PARSE: return "parse error";
    case UPDOM_ERR_CLASS_MISMATCH: return "class mismatch";
    case UPDOM_ERR_SIZE_CAP: return "size cap exceeded";
    case UPDOM_ERR_CONTRACT: return "contract violation";
    case UPDOM_ERR_VERIFICATION: return "verification failure";
    case UPDOM_ERR_IO: return "i/o error";
    case UPDOM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void updom_string_free(char *text) { std::free(text); }

updom_status updom_graph_parse(const char *text, updom_format format, updom_graph **out) {
    return guarded([&] {
        require(text && out, "updom_graph_parse: null argument");
        updom::Graph g;
        switch (format) {
        case UPDOM_FORMAT_EDGELIST: g = updom::parse_edge_list(text); break;
        case UPDOM_FORMAT_DIMACS: g = updom::parse_dimacs(text); break;
        default: g = updom::parse_graph_auto(text); break;
        }
        *out = new updom_graph{std::move(g)};
    });
}

updom_status updom_graph_generate(const char *family, int n, uint64_t seed, updom_graph **out) {
    return guarded([&] {
        require(family && out, "updom_graph_generate: null argument");
        auto graphs = updom::generate(family, n, seed, 1);
        *out = new updom_graph{std::move(graphs.front())};
    });
}

void updom_graph_destroy(updom_graph *graph) { delete graph; }

int updom_graph_order(const updom_graph *graph) { return graph ? graph->graph.order() : 0; }

int updom_graph_size(const updom_graph *graph) { return graph ? graph->graph.size() : 0; }

updom_status updom_graph_edge_list(const updom_graph *graph, char **out) {
    return guarded([&] {
        require(graph && out, "updom_graph_edge_list: null argument");
        *out = copy_string(updom::to_edge_list(graph->graph));
    });
}

updom_status updom_graph_classes(const updom_graph *graph, char **out) {
    return guarded([&] {
        require(graph && out, "updom_graph_classes: null argument");
        std::string text;
        for (auto c : updom::classify(graph->graph).tags)
            text += (text.empty() ? "" : ",") + std::string(updom::to_string(c));
        *out = copy_string(text);
    });
}

updom_status updom_solve(const updom_graph *graph, const char *method, int force, updom_solution **out) {
    return guarded([&] {
        require(graph && out, "updom_solve: null argument");
        updom::SolveOptions options;
        options.method = updom::parse_method(method ? method : "auto");
        options.force = force != 0;
        auto report = updom::solve(graph->graph, options);
        *out = new updom_solution{graph->graph, std::move(report)};
    });
}

void updom_solution_destroy(updom_solution *solution) { delete solution; }

int updom_solution_upper_domatic(const updom_solution *solution) {
    return solution ? solution->report.upper_domatic : 0;
}

int updom_solution_transitivity(const updom_solution *solution) {
    return solution && solution->report.transitivity ? *solution->report.transitivity : -1;
}

updom_status updom_solution_method(const updom_solution *solution, char **out) {
    return guarded([&] {
        require(solution && out, "updom_solution_method: null argument");
        *out = copy_string(solution->report.method);
    });
}

updom_status updom_solution_text(const updom_solution *solution, char **out) {
    return guarded([&] {
        require(solution && out, "updom_solution_text: null argument");
        *out = copy_string(updom::to_text(solution->graph, solution->report));
    });
}

updom_status updom_solution_json(const updom_solution *solution, char **out) {
    return guarded([&] {
        require(solution && out, "updom_solution_json: null argument");
        *out = copy_string(updom::to_json(solution->graph, solution->report));
    });
}

updom_status updom_solution_witness(const updom_solution *solution, char **out) {
    return guarded([&] {
        require(solution && out, "updom_solution_witness: null argument");
        *out = copy_string(updom::partition_text_for(solution->graph, solution->report.witness));
    });
}

updom_status updom_partition_parse(const updom_graph *graph, const char *text, updom_partition **out) {
    return guarded([&] {
        require(graph && text && out, "updom_partition_parse: null argument");
        *out = new updom_partition{updom::parse_partition_for(graph->graph, text)};
    });
}

void updom_partition_destroy(updom_partition *partition) { delete partition; }

int updom_partition_order(const updom_partition *partition) {
    return partition ? partition->partition.order() : 0;
}

updom_status updom_check_partition(const updom_graph *graph, const updom_partition *partition,
                                   updom_check **out) {
    return guarded([&] {
        require(graph && partition && out, "updom_check_partition: null argument");
        *out = new updom_check{updom::check_partition(graph->graph, partition->partition)};
    });
}

void updom_check_destroy(updom_check *check) { delete check; }

updom_status updom_check_has_kind(const updom_check *check, const char *kind, int *holds) {
    return guarded([&] {
        require(check && kind && holds, "updom_check_has_kind: null argument");
        *holds = updom::has_kind(check->report.kinds, updom::parse_kind(kind)) ? 1 : 0;
    });
}

updom_status updom_check_text(const updom_check *check, char **out) {
    return guarded([&] {
        require(check && out, "updom_check_text: null argument");
        *out = copy_string(updom::to_text(check->report));
    });
}

updom_status updom_check_json(const updom_check *check, char **out) {
    return guarded([&] {
        require(check && out, "updom_check_json: null argument");
        *out = copy_string(updom::to_json(check->report));
    });
}

updom_status updom_hunt(const char *source, int n_lo, int n_hi, uint64_t seed, int count, int workers,
                        const char *out_path, char **summary, int *counterexamples) {
    std::ofstream file;
    if (out_path) {
        file.open(out_path);
        if (!file)
            return fail(UPDOM_ERR_IO, "cannot open report file for writing");
    }
    return guarded([&] {
        require(source && summary, "updom_hunt: null argument");
        auto stream = updom::hunt_stream(source, n_lo, n_hi, seed, count);
        auto result = updom::run_hunt(stream, workers);
        if (out_path) {
            for (const auto &record : result.records)
                file << updom::to_jsonl(record) << '\n';
            if (!file)
                throw std::runtime_error("failed writing report file");
        }
        *summary = copy_string(result.text);
        if (counterexamples)
            *counterexamples = result.counterexamples;
    });
}

updom_status updom_selftest(int quick, int inject_fault, int *passed, char **log) {
    return guarded([&] {
        require(passed && log, "updom_selftest: null argument");
        updom::SelftestOptions options;
        options.quick = quick != 0;
        options.inject_fault = inject_fault != 0;
        auto result = updom::selftest(options);
        *passed = result.passed ? 1 : 0;
        *log = copy_string(result.log);
    });
}

} // extern "C"
