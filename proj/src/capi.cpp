// Copyright 2026 The mec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mec.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "algorithms.hpp"
#include "bounds.hpp"
#include "graph.hpp"
#include "instances.hpp"
#include "oracle.hpp"

struct mec_graph {
  mec::WeightedGraph g;
};

struct mec_profile {
  mec::RankProfile p;
};

struct mec_solution {
  mec::ColoringSolution sol;
  mec::AlgorithmTrace trace;
  mec_algorithm alg = MEC_ALG_NONE;
};

struct mec_certificate {
  mec::OptimalCertificate cert;
  mec_solution view;  // wraps cert.solution for the borrowed accessor
};

struct mec_search_result {
  mec::SearchResult res;
  std::optional<mec_graph> instance;
  std::optional<mec_solution> alg1;
  std::optional<mec_solution> kk;
  std::optional<mec_certificate> cert;
};

namespace {

thread_local std::string t_last_error;

mec_status fail(mec_status code, const char* message) {
  t_last_error = message;
  return code;
}

mec_status status_of(mec::ErrorCode code) {
  switch (code) {
    case mec::ErrorCode::kParse:
      return MEC_ERR_PARSE;
    case mec::ErrorCode::kNotATree:
      return MEC_ERR_NOT_A_TREE;
    case mec::ErrorCode::kBudgetExceeded:
      return MEC_ERR_BUDGET_EXCEEDED;
    case mec::ErrorCode::kInvalidSolution:
      return MEC_ERR_INVALID_SOLUTION;
    case mec::ErrorCode::kIo:
      return MEC_ERR_IO;
    case mec::ErrorCode::kInvalidArgument:
    default:
      return MEC_ERR_INVALID_ARGUMENT;
  }
}

template <typename Fn>
mec_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const mec::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(MEC_ERR_INVALID_ARGUMENT, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mec_algorithm tag_to_c(mec::AlgorithmTag tag) {
  switch (tag) {
    case mec::AlgorithmTag::kAlg1:
      return MEC_ALG_ALG1;
    case mec::AlgorithmTag::kKk:
      return MEC_ALG_KK;
    default:
      return MEC_ALG_BEST;
  }
}

mec_certificate make_certificate(mec::OptimalCertificate cert) {
  mec_certificate c;
  c.view.sol = cert.solution;
  c.view.alg = MEC_ALG_NONE;
  c.cert = std::move(cert);
  return c;
}

}  // namespace

extern "C" {

const char* mec_version(void) { return "1.0.0"; }

const char* mec_last_error(void) { return t_last_error.c_str(); }

void mec_string_free(char* s) { std::free(s); }

/* ---- graphs ------------------------------------------------------------ */

mec_status mec_graph_parse(const char* text, mec_graph** out) {
  if (!text || !out)
    return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new mec_graph{mec::WeightedGraph::parse(text)};
    return MEC_OK;
  });
}

mec_status mec_graph_from_edges(uint32_t n, uint32_t m, const uint32_t* u,
                                const uint32_t* v, const uint64_t* w,
                                mec_graph** out) {
  if (!out || (m > 0 && (!u || !v || !w)))
    return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<mec::Edge> edges(m);
    for (uint32_t i = 0; i < m; ++i) edges[i] = mec::Edge{u[i], v[i], w[i]};
    *out = new mec_graph{mec::WeightedGraph(n, std::move(edges))};
    return MEC_OK;
  });
}

void mec_graph_free(mec_graph* g) { delete g; }

char* mec_graph_serialize(const mec_graph* g) {
  if (!g) return nullptr;
  return copy_string(g->g.serialize());
}

uint32_t mec_graph_vertex_count(const mec_graph* g) {
  return g ? g->g.vertex_count() : 0;
}

uint32_t mec_graph_edge_count(const mec_graph* g) {
  return g ? g->g.edge_count() : 0;
}

mec_status mec_graph_edge(const mec_graph* g, uint32_t index, uint32_t* u,
                          uint32_t* v, uint64_t* w) {
  if (!g || index >= g->g.edge_count())
    return fail(MEC_ERR_INVALID_ARGUMENT, "edge index out of range");
  const mec::Edge& e = g->g.edge(index);
  if (u) *u = e.u;
  if (v) *v = e.v;
  if (w) *w = e.w;
  return MEC_OK;
}

uint32_t mec_graph_degree(const mec_graph* g, uint32_t vertex) {
  if (!g || vertex >= g->g.vertex_count()) return 0;
  return g->g.degree(vertex);
}

uint32_t mec_graph_max_degree(const mec_graph* g) {
  return g ? g->g.max_degree() : 0;
}

mec_status mec_graph_check_tree(const mec_graph* g, uint32_t root) {
  if (!g) return fail(MEC_ERR_INVALID_ARGUMENT, "null graph");
  return guarded([&] {
    mec::validate_tree(g->g, root);
    return MEC_OK;
  });
}

/* ---- rank profile and lower bound -------------------------------------- */

mec_status mec_rank_profile(const mec_graph* g, mec_profile** out) {
  if (!g || !out) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new mec_profile{mec::rank_weights(g->g)};
    return MEC_OK;
  });
}

void mec_profile_free(mec_profile* p) { delete p; }

uint32_t mec_profile_delta(const mec_profile* p) {
  return p ? p->p.delta() : 0;
}

uint64_t mec_profile_rank_weight(const mec_profile* p, uint32_t rank) {
  if (!p || rank < 1 || rank > p->p.delta()) return 0;
  return p->p.y[rank - 1];
}

uint64_t mec_lower_bound(const mec_graph* g) {
  return g ? mec::lower_bound(g->g) : 0;
}

/* ---- approximation algorithms ------------------------------------------ */

mec_status mec_solve(const mec_graph* g, mec_algorithm algorithm,
                     uint32_t root, mec_solution** out) {
  if (!g || !out) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    mec_solution result;
    switch (algorithm) {
      case MEC_ALG_ALG1: {
        mec::AlgorithmRun run = mec::algorithm1(mec::validate_tree(g->g, root));
        result = mec_solution{std::move(run.solution), std::move(run.trace),
                              MEC_ALG_ALG1};
        break;
      }
      case MEC_ALG_KK: {
        mec::AlgorithmRun run = mec::kk_greedy(g->g);
        result = mec_solution{std::move(run.solution), std::move(run.trace),
                              MEC_ALG_KK};
        break;
      }
      case MEC_ALG_BEST: {
        mec::BestOfRun run = mec::best_of(mec::validate_tree(g->g, root));
        mec::AlgorithmRun& winner =
            run.chosen == mec::AlgorithmTag::kAlg1 ? run.alg1 : run.kk;
        result = mec_solution{std::move(winner.solution),
                              std::move(winner.trace), tag_to_c(run.chosen)};
        break;
      }
      default:
        throw mec::InvalidArgumentError("unknown algorithm");
    }
    *out = new mec_solution(std::move(result));
    return MEC_OK;
  });
}

void mec_solution_free(mec_solution* s) { delete s; }

mec_algorithm mec_solution_algorithm(const mec_solution* s) {
  return s ? s->alg : MEC_ALG_NONE;
}

uint32_t mec_solution_class_count(const mec_solution* s) {
  return s ? s->sol.class_count() : 0;
}

uint64_t mec_solution_class_weight(const mec_solution* s, uint32_t cls) {
  if (!s || cls >= s->sol.class_count()) return 0;
  return s->sol.class_weights[cls];
}

uint32_t mec_solution_class_size(const mec_solution* s, uint32_t cls) {
  if (!s || cls >= s->sol.class_count()) return 0;
  return static_cast<uint32_t>(s->sol.classes[cls].size());
}

uint32_t mec_solution_class_edge(const mec_solution* s, uint32_t cls,
                                 uint32_t position) {
  if (!s || cls >= s->sol.class_count() ||
      position >= s->sol.classes[cls].size())
    return UINT32_MAX;
  return s->sol.classes[cls][position];
}

uint64_t mec_solution_total_weight(const mec_solution* s) {
  return s ? s->sol.total : 0;
}

char* mec_solution_serialize(const mec_solution* s) {
  if (!s) return nullptr;
  return copy_string(mec::serialize_solution(s->sol));
}

mec_status mec_solution_parse(const mec_graph* g, const char* text,
                              mec_solution** out) {
  if (!g || !text || !out)
    return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    mec::ColoringSolution sol = mec::parse_solution(g->g, text);
    *out = new mec_solution{std::move(sol), {}, MEC_ALG_NONE};
    return MEC_OK;
  });
}

mec_status mec_solution_validate(const mec_graph* g, const mec_solution* s) {
  if (!g || !s) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  auto violation = mec::validate_solution(g->g, s->sol);
  if (violation)
    return fail(MEC_ERR_INVALID_SOLUTION, violation->detail.c_str());
  return MEC_OK;
}

uint32_t mec_solution_trace_length(const mec_solution* s) {
  return s ? static_cast<uint32_t>(s->trace.steps.size()) : 0;
}

mec_status mec_solution_trace_step(const mec_solution* s, uint32_t i,
                                   uint32_t* edge, uint32_t* chosen_class,
                                   uint32_t* inspected) {
  if (!s || i >= s->trace.steps.size())
    return fail(MEC_ERR_INVALID_ARGUMENT, "trace index out of range");
  const mec::TraceStep& step = s->trace.steps[i];
  if (edge) *edge = step.edge;
  if (chosen_class) *chosen_class = step.chosen_class;
  if (inspected) *inspected = step.inspected;
  return MEC_OK;
}

/* ---- exact oracle -------------------------------------------------------- */

mec_status mec_solve_exact(const mec_graph* g, uint64_t node_budget,
                           mec_certificate** out) {
  if (!g || !out) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  const uint64_t budget = node_budget ? node_budget : MEC_DEFAULT_ORACLE_BUDGET;
  try {
    *out = new mec_certificate(make_certificate(mec::exact_mec(g->g, budget)));
    return MEC_OK;
  } catch (const mec::OracleBudgetExceeded& e) {
    *out = new mec_certificate(make_certificate(e.incumbent()));
    return fail(MEC_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const mec::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(MEC_ERR_INVALID_ARGUMENT, e.what());
  }
}

void mec_certificate_free(mec_certificate* c) { delete c; }

uint64_t mec_certificate_opt(const mec_certificate* c) {
  return c ? c->cert.opt : 0;
}

uint32_t mec_certificate_class_count(const mec_certificate* c) {
  return c ? c->cert.class_count : 0;
}

uint64_t mec_certificate_nodes(const mec_certificate* c) {
  return c ? c->cert.nodes_explored : 0;
}

int mec_certificate_is_optimal(const mec_certificate* c) {
  return c && c->cert.optimal ? 1 : 0;
}

const mec_solution* mec_certificate_solution(const mec_certificate* c) {
  return c ? &c->view : nullptr;
}

mec_status mec_certificate_check(const mec_graph* g, const mec_certificate* c,
                                 int* solution_valid, int* ranks_dominated,
                                 int* lower_bound_ok) {
  if (!g || !c) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    mec::CertificateChecks checks =
        mec::check_certificate(g->g, c->cert, mec::rank_weights(g->g));
    if (solution_valid) *solution_valid = checks.solution_valid ? 1 : 0;
    if (ranks_dominated) *ranks_dominated = checks.ranks_dominated ? 1 : 0;
    if (lower_bound_ok) *lower_bound_ok = checks.lower_bound_ok ? 1 : 0;
    if (!checks.all_passed()) t_last_error = checks.detail;
    return MEC_OK;
  });
}

/* ---- instance generators ------------------------------------------------ */

mec_status mec_gen_random_tree(uint32_t n, uint64_t wmin, uint64_t wmax,
                               uint64_t seed, mec_graph** out) {
  if (!out) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new mec_graph{mec::gen_random_tree(n, wmin, wmax, seed)};
    return MEC_OK;
  });
}

mec_status mec_gen_alg1_worst(uint64_t big_c, uint64_t eps, mec_graph** out) {
  if (!out) return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new mec_graph{mec::gen_alg1_worst(big_c, eps)};
    return MEC_OK;
  });
}

/* ---- worst-case search --------------------------------------------------- */

mec_status mec_search_combined_worst(uint32_t max_edges,
                                     const uint64_t* levels,
                                     uint32_t level_count, uint64_t budget,
                                     uint64_t seed, uint64_t oracle_budget,
                                     mec_search_result** out) {
  if (!out || (level_count > 0 && !levels))
    return fail(MEC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<mec::Weight> level_vec(levels, levels + level_count);
    mec::SearchResult res = mec::search_combined_worst(
        max_edges, level_vec, budget, seed,
        oracle_budget ? oracle_budget : MEC_DEFAULT_ORACLE_BUDGET);
    auto result = new mec_search_result;
    if (res.best) {
      result->instance.emplace(mec_graph{res.best->instance});
      result->alg1.emplace(mec_solution{res.best->alg1.solution,
                                        res.best->alg1.trace, MEC_ALG_ALG1});
      result->kk.emplace(
          mec_solution{res.best->kk.solution, res.best->kk.trace, MEC_ALG_KK});
      result->cert.emplace(make_certificate(res.best->certificate));
    }
    result->res = std::move(res);
    *out = result;
    return MEC_OK;
  });
}

void mec_search_result_free(mec_search_result* r) { delete r; }

uint64_t mec_search_result_evaluated(const mec_search_result* r) {
  return r ? r->res.evaluated : 0;
}

uint64_t mec_search_result_oracle_skipped(const mec_search_result* r) {
  return r ? r->res.oracle_skipped : 0;
}

int mec_search_result_space_exhausted(const mec_search_result* r) {
  return r && r->res.space_exhausted ? 1 : 0;
}

int mec_search_result_has_witness(const mec_search_result* r) {
  return r && r->res.best ? 1 : 0;
}

const mec_graph* mec_search_result_instance(const mec_search_result* r) {
  return r && r->instance ? &*r->instance : nullptr;
}

uint64_t mec_search_result_combined_weight(const mec_search_result* r) {
  return r && r->res.best ? r->res.best->combined : 0;
}

uint64_t mec_search_result_opt(const mec_search_result* r) {
  return r && r->res.best ? r->res.best->opt : 0;
}

double mec_search_result_ratio(const mec_search_result* r) {
  return r && r->res.best ? r->res.best->ratio() : 0.0;
}

uint32_t mec_search_result_alg1_root(const mec_search_result* r) {
  return r && r->res.best ? r->res.best->alg1_root : 0;
}

const mec_solution* mec_search_result_alg1(const mec_search_result* r) {
  return r && r->alg1 ? &*r->alg1 : nullptr;
}

const mec_solution* mec_search_result_kk(const mec_search_result* r) {
  return r && r->kk ? &*r->kk : nullptr;
}

const mec_certificate* mec_search_result_certificate(
    const mec_search_result* r) {
  return r && r->cert ? &*r->cert : nullptr;
}

} /* extern "C" */
