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

#include "oracle.hpp"

#include <algorithm>
#include <limits>

#include "algorithms.hpp"

namespace mec {
namespace {

// Recursion holds one frame per edge.
constexpr std::uint32_t kMaxOracleEdges = 20'000;

struct SearchState {
  const WeightedGraph* g;
  OracleOptions options;
  std::uint64_t nodes = 0;

  // Per-class mutable state, indexed by class.
  std::vector<std::vector<std::uint64_t>> occupancy;
  std::vector<Weight> class_max;
  std::vector<std::vector<EdgeIndex>> classes;
  std::uint32_t open_classes = 0;
  Weight committed = 0;

  // Incumbent.
  std::vector<std::vector<EdgeIndex>> best_classes;
  Weight best_total = std::numeric_limits<Weight>::max();

  std::size_t words = 0;

  bool vertex_busy(std::uint32_t cls, VertexId v) const {
    return (occupancy[cls][v >> 6] >> (v & 63)) & 1;
  }

  void flip(std::uint32_t cls, const Edge& e) {
    occupancy[cls][e.u >> 6] ^= 1ULL << (e.u & 63);
    occupancy[cls][e.v >> 6] ^= 1ULL << (e.v & 63);
  }

  void descend(EdgeIndex next) {
    ++nodes;
    if (nodes > options.node_budget) throw_budget();
    if (options.prune_with_incumbent && committed >= best_total) return;

    if (next == g->edge_count()) {
      if (options.leaf_counter) ++*options.leaf_counter;
      if (committed < best_total) {
        best_total = committed;
        best_classes.assign(classes.begin(), classes.begin() + open_classes);
      }
      return;
    }

    const Edge& e = g->edge(next);
    for (std::uint32_t c = 0; c < open_classes; ++c) {
      if (vertex_busy(c, e.u) || vertex_busy(c, e.v)) continue;
      const Weight old_max = class_max[c];
      const Weight new_max = std::max(old_max, e.w);
      flip(c, e);
      classes[c].push_back(next);
      class_max[c] = new_max;
      committed += new_max - old_max;
      descend(next + 1);
      committed -= new_max - old_max;
      class_max[c] = old_max;
      classes[c].pop_back();
      flip(c, e);
    }

    // Restricted growth: a fresh class may only take the next index.
    const std::uint32_t c = open_classes;
    if (c >= classes.size()) {
      classes.emplace_back();
      class_max.push_back(0);
      occupancy.emplace_back(words, 0);
    }
    ++open_classes;
    flip(c, e);
    classes[c].push_back(next);
    class_max[c] = e.w;
    committed += e.w;
    descend(next + 1);
    committed -= e.w;
    classes[c].pop_back();
    flip(c, e);
    --open_classes;
  }

  [[noreturn]] void throw_budget();
};

OptimalCertificate finalize(const WeightedGraph& g,
                            std::vector<std::vector<EdgeIndex>> classes,
                            std::uint64_t nodes, bool optimal) {
  // Certificate classes are reported heaviest-first; ties keep the class
  // whose first edge has the smaller index in front.
  ColoringSolution sol = make_solution(g, std::move(classes));
  std::vector<std::uint32_t> order(sol.classes.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&sol](std::uint32_t a, std::uint32_t b) {
    if (sol.class_weights[a] != sol.class_weights[b])
      return sol.class_weights[a] > sol.class_weights[b];
    return sol.classes[a] < sol.classes[b];
  });
  std::vector<std::vector<EdgeIndex>> sorted_classes;
  sorted_classes.reserve(order.size());
  for (std::uint32_t i : order) sorted_classes.push_back(std::move(sol.classes[i]));

  OptimalCertificate cert;
  cert.solution = make_solution(g, std::move(sorted_classes));
  cert.opt = cert.solution.total;
  cert.class_count = cert.solution.class_count();
  cert.nodes_explored = nodes;
  cert.optimal = optimal;
  return cert;
}

void SearchState::throw_budget() {
  throw OracleBudgetExceeded(finalize(*g, best_classes, nodes, false),
                             options.node_budget);
}

}  // namespace

OptimalCertificate exact_mec(const WeightedGraph& g,
                             const OracleOptions& options) {
  if (options.node_budget == 0)
    throw InvalidArgumentError("oracle node budget must be positive");
  if (g.edge_count() > kMaxOracleEdges)
    throw InvalidArgumentError("instance too large for the exact oracle");

  if (g.edge_count() == 0) {
    OptimalCertificate cert;
    cert.optimal = true;
    return cert;
  }

  SearchState state;
  state.g = &g;
  state.options = options;
  state.words = (g.vertex_count() + 63) / 64;

  // Seed the incumbent with the greedy solutions so pruning bites from the
  // first branch and a budget-exceeded error still carries a real coloring.
  AlgorithmRun seed = kk_greedy(g);
  state.best_total = seed.solution.total;
  state.best_classes = seed.solution.classes;
  if (is_tree(g)) {
    AlgorithmRun tree_seed = algorithm1(validate_tree(g, 0));
    if (tree_seed.solution.total < state.best_total) {
      state.best_total = tree_seed.solution.total;
      state.best_classes = tree_seed.solution.classes;
    }
  }

  state.descend(0);
  return finalize(g, std::move(state.best_classes), state.nodes, true);
}

OptimalCertificate exact_mec(const WeightedGraph& g,
                             std::uint64_t node_budget) {
  OracleOptions options;
  options.node_budget = node_budget;
  return exact_mec(g, options);
}

CertificateChecks check_certificate(const WeightedGraph& g,
                                    const OptimalCertificate& cert,
                                    const RankProfile& profile) {
  CertificateChecks checks;

  auto violation = validate_solution(g, cert.solution);
  checks.solution_valid = !violation.has_value();
  if (violation) {
    checks.detail = "invalid solution: " + violation->detail;
    return checks;
  }

  // Sorted class weights must dominate the profile rank by rank. A valid
  // partition always has at least delta classes, so w_i exists for
  // i <= delta.
  std::vector<Weight> sorted = cert.solution.class_weights;
  std::sort(sorted.rbegin(), sorted.rend());
  checks.ranks_dominated = true;
  for (std::uint32_t i = 0; i < profile.delta(); ++i) {
    if (i >= sorted.size() || sorted[i] < profile.y[i]) {
      checks.ranks_dominated = false;
      checks.detail = "class weight rank " + std::to_string(i + 1) +
                      " below profile value " + std::to_string(profile.y[i]);
      break;
    }
  }

  checks.lower_bound_ok = cert.opt >= lower_bound(profile);
  if (checks.ranks_dominated && !checks.lower_bound_ok)
    checks.detail = "certificate total below the rank lower bound";
  return checks;
}

}  // namespace mec
