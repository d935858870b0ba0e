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

#ifndef UPDOM_UPDOM_H
#define UPDOM_UPDOM_H

#include <stdint.h>

#if defined(UPDOM_BUILDING_LIBRARY)
#define UPDOM_API __attribute__((visibility("default")))
#else
#define UPDOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returning updom_status leaves outputs untouched on failure
 * and records a message readable through updom_last_error() on the calling
 * thread. Strings handed out by the library are released with
 * updom_string_free. */

typedef enum updom_status {
    UPDOM_OK = 0,
    UPDOM_ERR_PARSE = 1,          /* malformed graph or partition text */
    UPDOM_ERR_CLASS_MISMATCH = 2, /* requested method does not fit the graph */
    UPDOM_ERR_SIZE_CAP = 3,       /* exhaustive search refused the instance */
    UPDOM_ERR_CONTRACT = 4,       /* invalid argument or precondition */
    UPDOM_ERR_VERIFICATION = 5,   /* a constructed object failed its own check */
    UPDOM_ERR_IO = 6,
    UPDOM_ERR_INTERNAL = 7
} updom_status;

typedef enum updom_format {
    UPDOM_FORMAT_AUTO = 0,
    UPDOM_FORMAT_EDGELIST = 1,
    UPDOM_FORMAT_DIMACS = 2
} updom_format;

typedef struct updom_graph updom_graph;
typedef struct updom_partition updom_partition;
typedef struct updom_solution updom_solution;
typedef struct updom_check updom_check;

UPDOM_API const char *updom_last_error(void);
UPDOM_API const char *updom_status_name(updom_status status);
UPDOM_API void updom_string_free(char *text);

/* Graphs */
UPDOM_API updom_status updom_graph_parse(const char *text, updom_format format, updom_graph **out);
/* family: path, cycle, complete, star, tree, unicyclic, split, chain. */
UPDOM_API updom_status updom_graph_generate(const char *family, int n, uint64_t seed, updom_graph **out);
UPDOM_API void updom_graph_destroy(updom_graph *graph);
UPDOM_API int updom_graph_order(const updom_graph *graph);
UPDOM_API int updom_graph_size(const updom_graph *graph);
UPDOM_API updom_status updom_graph_edge_list(const updom_graph *graph, char **out);
/* Comma-separated class tags. */
UPDOM_API updom_status updom_graph_classes(const updom_graph *graph, char **out);

/* Solving. method: auto, oracle, tree, unicyclic, split, cobip. */
UPDOM_API updom_status updom_solve(const updom_graph *graph, const char *method, int force,
                                   updom_solution **out);
UPDOM_API void updom_solution_destroy(updom_solution *solution);
UPDOM_API int updom_solution_upper_domatic(const updom_solution *solution);
/* -1 when the solver did not compute it. */
UPDOM_API int updom_solution_transitivity(const updom_solution *solution);
UPDOM_API updom_status updom_solution_method(const updom_solution *solution, char **out);
UPDOM_API updom_status updom_solution_text(const updom_solution *solution, char **out);
UPDOM_API updom_status updom_solution_json(const updom_solution *solution, char **out);
/* Witness in partition text format (one block per line, graph vertex names). */
UPDOM_API updom_status updom_solution_witness(const updom_solution *solution, char **out);

/* Partitions and checks. kind: upper-domatic, transitive, domatic, grundy. */
UPDOM_API updom_status updom_partition_parse(const updom_graph *graph, const char *text,
                                             updom_partition **out);
UPDOM_API void updom_partition_destroy(updom_partition *partition);
UPDOM_API int updom_partition_order(const updom_partition *partition);
UPDOM_API updom_status updom_check_partition(const updom_graph *graph, const updom_partition *partition,
                                             updom_check **out);
UPDOM_API void updom_check_destroy(updom_check *check);
UPDOM_API updom_status updom_check_has_kind(const updom_check *check, const char *kind, int *holds);
UPDOM_API updom_status updom_check_text(const updom_check *check, char **out);
UPDOM_API updom_status updom_check_json(const updom_check *check, char **out);

/* Conjecture hunt. source: exhaustive, random, complete, empty. Records are
 * written as JSON lines to out_path when it is not NULL; `summary` receives
 * counts by D value and sink existence. */
UPDOM_API updom_status updom_hunt(const char *source, int n_lo, int n_hi, uint64_t seed, int count,
                                  int workers, const char *out_path, char **summary,
                                  int *counterexamples);

/* Cross-solver equivalence suites; `inject_fault` corrupts one answer. */
UPDOM_API updom_status updom_selftest(int quick, int inject_fault, int *passed, char **log);

#ifdef __cplusplus
}
#endif

#endif /* UPDOM_UPDOM_H */
