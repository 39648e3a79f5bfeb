/* Copyright 2026 The mec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* mec.h -- C API of libmec, a solver library for the max edge coloring
 * problem: partition a weighted graph's edges into matchings, where each
 * matching costs its heaviest edge, minimizing the total cost.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions that can fail return a mec_status; on failure a human-readable
 * message is available from mec_last_error() until the next failing call on
 * the same thread. Handles are immutable once created and may be shared
 * freely across threads.
 */

#ifndef MEC_H
#define MEC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MEC_API __declspec(dllexport)
#else
#define MEC_API __attribute__((visibility("default")))
#endif

typedef enum mec_status {
  MEC_OK = 0,
  MEC_ERR_PARSE = 1,            /* malformed instance or solution text */
  MEC_ERR_NOT_A_TREE = 2,       /* tree-only operation on a non-tree */
  MEC_ERR_BUDGET_EXCEEDED = 3,  /* oracle node budget ran out */
  MEC_ERR_INVALID_ARGUMENT = 4,
  MEC_ERR_INVALID_SOLUTION = 5, /* validation found a violation */
  MEC_ERR_IO = 6
} mec_status;

typedef enum mec_algorithm {
  MEC_ALG_ALG1 = 0, /* tree first-fit in pre-order, heaviest child first */
  MEC_ALG_KK = 1,   /* greedy first-fit over all edges, heaviest first */
  MEC_ALG_BEST = 2, /* cheaper of the two; ties go to MEC_ALG_ALG1 */
  MEC_ALG_NONE = 3  /* solution not produced by a solver (e.g. parsed) */
} mec_algorithm;

/* Default node budget of the exact solver. */
#define MEC_DEFAULT_ORACLE_BUDGET UINT64_C(50000000)

typedef struct mec_graph mec_graph;
typedef struct mec_profile mec_profile;
typedef struct mec_solution mec_solution;
typedef struct mec_certificate mec_certificate;
typedef struct mec_search_result mec_search_result;

/* Library version string, e.g. "1.0.0". */
MEC_API const char* mec_version(void);

/* Message describing the most recent failure on the calling thread. Empty
 * string if no failure happened yet. The pointer stays valid until the next
 * failing call on the same thread. */
MEC_API const char* mec_last_error(void);

/* Releases a string returned by one of the *_serialize functions. */
MEC_API void mec_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* Parses the instance text format:
 *   line 1:        "n m"
 *   lines 2..m+1:  "u v w"   (0-indexed vertices, integer weight >= 1)
 * Lines starting with '#' are ignored; the trailing newline is optional.
 * Edge order in the file defines edge indices. */
MEC_API mec_status mec_graph_parse(const char* text, mec_graph** out);

/* Builds a graph from arrays of length m. */
MEC_API mec_status mec_graph_from_edges(uint32_t n, uint32_t m,
                                        const uint32_t* u, const uint32_t* v,
                                        const uint64_t* w, mec_graph** out);

MEC_API void mec_graph_free(mec_graph* g);

/* Instance text form of the graph; free with mec_string_free. */
MEC_API char* mec_graph_serialize(const mec_graph* g);

MEC_API uint32_t mec_graph_vertex_count(const mec_graph* g);
MEC_API uint32_t mec_graph_edge_count(const mec_graph* g);
MEC_API mec_status mec_graph_edge(const mec_graph* g, uint32_t index,
                                  uint32_t* u, uint32_t* v, uint64_t* w);
MEC_API uint32_t mec_graph_degree(const mec_graph* g, uint32_t vertex);
MEC_API uint32_t mec_graph_max_degree(const mec_graph* g);

/* MEC_OK when g is a tree and root is a valid vertex; MEC_ERR_NOT_A_TREE
 * reports disconnectedness and wrong edge count distinctly via
 * mec_last_error(). */
MEC_API mec_status mec_graph_check_tree(const mec_graph* g, uint32_t root);

/* ---- rank profile and lower bound -------------------------------------- */

/* The profile y_1 >= ... >= y_delta: y_i is the heaviest edge among those
 * ranked i in some vertex's incidence list sorted by non-increasing
 * weight. */
MEC_API mec_status mec_rank_profile(const mec_graph* g, mec_profile** out);
MEC_API void mec_profile_free(mec_profile* p);
MEC_API uint32_t mec_profile_delta(const mec_profile* p);
/* rank is 1-based; returns 0 for rank outside [1, delta]. */
MEC_API uint64_t mec_profile_rank_weight(const mec_profile* p, uint32_t rank);

/* Sum of the rank profile: a lower bound on the optimal total weight. */
MEC_API uint64_t mec_lower_bound(const mec_graph* g);

/* ---- approximation algorithms ------------------------------------------ */

/* Runs the selected algorithm. MEC_ALG_ALG1 and MEC_ALG_BEST require a tree
 * (MEC_ERR_NOT_A_TREE otherwise) and use `root`; MEC_ALG_KK accepts any
 * graph and ignores `root`. */
MEC_API mec_status mec_solve(const mec_graph* g, mec_algorithm algorithm,
                             uint32_t root, mec_solution** out);

MEC_API void mec_solution_free(mec_solution* s);

/* The algorithm that produced the solution. For MEC_ALG_BEST requests this
 * is the winning algorithm (MEC_ALG_ALG1 or MEC_ALG_KK). */
MEC_API mec_algorithm mec_solution_algorithm(const mec_solution* s);

MEC_API uint32_t mec_solution_class_count(const mec_solution* s);
MEC_API uint64_t mec_solution_class_weight(const mec_solution* s,
                                           uint32_t cls);
MEC_API uint32_t mec_solution_class_size(const mec_solution* s, uint32_t cls);
/* Edge index at `position` within class `cls`; UINT32_MAX when either index
 * is out of range. */
MEC_API uint32_t mec_solution_class_edge(const mec_solution* s, uint32_t cls,
                                         uint32_t position);
MEC_API uint64_t mec_solution_total_weight(const mec_solution* s);

/* Solution text format: line i holds the space-separated edge indices of
 * class i. Serialize output is freed with mec_string_free. Parse does not
 * validate beyond edge-index range; run mec_solution_validate. */
MEC_API char* mec_solution_serialize(const mec_solution* s);
MEC_API mec_status mec_solution_parse(const mec_graph* g, const char* text,
                                      mec_solution** out);

/* MEC_OK for a valid coloring; MEC_ERR_INVALID_SOLUTION otherwise, with the
 * first violation (class and edges) described by mec_last_error(). */
MEC_API mec_status mec_solution_validate(const mec_graph* g,
                                         const mec_solution* s);

/* First-fit trace of the producing algorithm: step i placed `edge` into
 * class `chosen_class` after rejecting `inspected` existing classes.
 * Solutions not produced by a solver have an empty trace. */
MEC_API uint32_t mec_solution_trace_length(const mec_solution* s);
MEC_API mec_status mec_solution_trace_step(const mec_solution* s, uint32_t i,
                                           uint32_t* edge,
                                           uint32_t* chosen_class,
                                           uint32_t* inspected);

/* ---- exact oracle -------------------------------------------------------- */

/* Exhaustive branch-and-bound over edge-to-class assignments in restricted
 * growth form. Returns MEC_OK with a provably optimal certificate, or
 * MEC_ERR_BUDGET_EXCEEDED once node_budget search nodes were expanded; in
 * that case *out still receives the best incumbent found, flagged
 * non-optimal. Pass 0 as node_budget for MEC_DEFAULT_ORACLE_BUDGET. */
MEC_API mec_status mec_solve_exact(const mec_graph* g, uint64_t node_budget,
                                   mec_certificate** out);

MEC_API void mec_certificate_free(mec_certificate* c);
MEC_API uint64_t mec_certificate_opt(const mec_certificate* c);
MEC_API uint32_t mec_certificate_class_count(const mec_certificate* c);
MEC_API uint64_t mec_certificate_nodes(const mec_certificate* c);
MEC_API int mec_certificate_is_optimal(const mec_certificate* c);

/* Certificate's coloring, classes sorted by non-increasing weight. Borrowed:
 * valid while the certificate lives; do not free. */
MEC_API const mec_solution* mec_certificate_solution(const mec_certificate* c);

/* Audits a certificate: solution validity, class weights dominating the
 * rank profile rank by rank, and opt >= lower bound. Always returns MEC_OK;
 * each flag is set to 1 (pass) or 0 (fail), and mec_last_error() describes
 * the first failure if any. Null flag pointers are allowed. */
MEC_API mec_status mec_certificate_check(const mec_graph* g,
                                         const mec_certificate* c,
                                         int* solution_valid,
                                         int* ranks_dominated,
                                         int* lower_bound_ok);

/* ---- instance generators ------------------------------------------------ */

/* Uniform random labeled tree (Pruefer decoding) with i.i.d. uniform
 * weights in [wmin, wmax]; deterministic in seed. Requires n >= 2. */
MEC_API mec_status mec_gen_random_tree(uint32_t n, uint64_t wmin,
                                       uint64_t wmax, uint64_t seed,
                                       mec_graph** out);

/* The 5-vertex path (C, eps, eps, C): the tree first-fit algorithm rooted
 * at 0 pays 2C while the optimum is C + 2*eps. Requires C > eps >= 1. */
MEC_API mec_status mec_gen_alg1_worst(uint64_t big_c, uint64_t eps,
                                      mec_graph** out);

/* ---- worst-case search --------------------------------------------------- */

/* Searches trees with up to max_edges edges and weights drawn from `levels`
 * for the maximum of min(alg1 over all roots, kk) / OPT. Evaluates at most
 * `budget` candidates: small sizes exhaustively (every free-tree shape with
 * every weight assignment), larger sizes by seeded sampling. Deterministic
 * in all arguments. Pass 0 as oracle_budget for the default. */
MEC_API mec_status mec_search_combined_worst(uint32_t max_edges,
                                             const uint64_t* levels,
                                             uint32_t level_count,
                                             uint64_t budget, uint64_t seed,
                                             uint64_t oracle_budget,
                                             mec_search_result** out);

MEC_API void mec_search_result_free(mec_search_result* r);
MEC_API uint64_t mec_search_result_evaluated(const mec_search_result* r);
MEC_API uint64_t mec_search_result_oracle_skipped(const mec_search_result* r);
/* 1 when every shape/weighting up to max_edges was covered. */
MEC_API int mec_search_result_space_exhausted(const mec_search_result* r);
MEC_API int mec_search_result_has_witness(const mec_search_result* r);

/* Witness accessors; all borrowed from the result, valid while it lives.
 * Only meaningful when mec_search_result_has_witness returns 1. */
MEC_API const mec_graph* mec_search_result_instance(
    const mec_search_result* r);
MEC_API uint64_t mec_search_result_combined_weight(const mec_search_result* r);
MEC_API uint64_t mec_search_result_opt(const mec_search_result* r);
MEC_API double mec_search_result_ratio(const mec_search_result* r);
MEC_API uint32_t mec_search_result_alg1_root(const mec_search_result* r);
MEC_API const mec_solution* mec_search_result_alg1(const mec_search_result* r);
MEC_API const mec_solution* mec_search_result_kk(const mec_search_result* r);
MEC_API const mec_certificate* mec_search_result_certificate(
    const mec_search_result* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MEC_H */
