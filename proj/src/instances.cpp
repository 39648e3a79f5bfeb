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

#include "instances.hpp"

#include <algorithm>
#include <queue>

#include "enumerate.hpp"
#include "rng.hpp"

namespace mec {
namespace {

// Decodes a Pruefer sequence into tree edges, smallest-leaf-first. The
// sequence may be empty (n == 2).
std::vector<Edge> decode_pruefer(std::uint32_t n,
                                 const std::vector<VertexId>& seq) {
  std::vector<std::uint32_t> degree(n, 1);
  for (VertexId v : seq) ++degree[v];

  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId s : seq) {
    VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge{std::min(leaf, s), std::max(leaf, s), 0});
    if (--degree[s] == 1) leaves.push(s);
  }
  VertexId a = leaves.top();
  leaves.pop();
  VertexId b = leaves.top();
  edges.push_back(Edge{std::min(a, b), std::max(a, b), 0});
  return edges;
}

std::vector<Edge> random_tree_edges(std::uint32_t n, Rng& rng) {
  std::vector<VertexId> seq(n >= 2 ? n - 2 : 0);
  for (VertexId& s : seq) s = rng.uniform_u32(0, n - 1);
  return decode_pruefer(n, seq);
}

// min over all roots of algorithm1's total, with the run at the best root.
std::pair<std::uint32_t, AlgorithmRun> alg1_best_root(const WeightedGraph& g) {
  std::uint32_t best_root = 0;
  AlgorithmRun best_run;
  bool first = true;
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    AlgorithmRun run = algorithm1(validate_tree(g, r));
    if (first || run.solution.total < best_run.solution.total) {
      best_root = r;
      best_run = std::move(run);
      first = false;
    }
  }
  return {best_root, std::move(best_run)};
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

struct SearchContext {
  std::span<const Weight> levels;
  std::uint64_t oracle_budget;
  SearchResult result;
  std::string best_encoding;  // serialized form of the current best, for ties

  void consider(WeightedGraph g) {
    ++result.evaluated;
    auto [root, alg1] = alg1_best_root(g);
    AlgorithmRun kk = kk_greedy(g);
    OptimalCertificate cert;
    try {
      cert = exact_mec(g, oracle_budget);
    } catch (const OracleBudgetExceeded&) {
      ++result.oracle_skipped;
      return;
    }
    const Weight combined = std::min(alg1.solution.total, kk.solution.total);
    const Weight opt = cert.opt;

    bool better = false;
    if (!result.best) {
      better = true;
    } else {
      // Compare combined/opt against the incumbent fraction exactly.
      const auto lhs = static_cast<unsigned __int128>(combined) *
                       result.best->opt;
      const auto rhs = static_cast<unsigned __int128>(result.best->combined) *
                       opt;
      if (lhs > rhs) {
        better = true;
      } else if (lhs == rhs) {
        std::string encoding = g.serialize();
        if (encoding < best_encoding) better = true;
      }
    }
    if (!better) return;

    best_encoding = g.serialize();
    result.best = SearchWitness{std::move(g), combined,          opt,
                                root,         std::move(alg1),   std::move(kk),
                                std::move(cert)};
  }
};

}  // namespace

WeightedGraph gen_random_tree(std::uint32_t n, Weight wmin, Weight wmax,
                              std::uint64_t seed) {
  if (n < 2) throw InvalidArgumentError("random tree needs n >= 2");
  if (wmin < 1 || wmin > wmax || wmax > kMaxWeight)
    throw InvalidArgumentError("weight bounds must satisfy 1 <= wmin <= wmax");
  Rng rng(seed);
  std::vector<Edge> edges = random_tree_edges(n, rng);
  for (Edge& e : edges) e.w = rng.uniform(wmin, wmax);
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph gen_alg1_worst(Weight big_c, Weight eps) {
  if (eps < 1 || big_c <= eps || big_c > kMaxWeight)
    throw InvalidArgumentError("worst-case family needs C > eps >= 1");
  std::vector<Edge> edges{
      Edge{0, 1, big_c},
      Edge{1, 2, eps},
      Edge{2, 3, eps},
      Edge{3, 4, big_c},
  };
  return WeightedGraph(5, std::move(edges));
}

SearchResult search_combined_worst(std::uint32_t max_edges,
                                   std::span<const Weight> levels_in,
                                   std::uint64_t budget, std::uint64_t seed,
                                   std::uint64_t oracle_budget) {
  if (max_edges < 1) throw InvalidArgumentError("max_edges must be >= 1");
  if (levels_in.empty())
    throw InvalidArgumentError("weight levels must be nonempty");
  std::vector<Weight> levels(levels_in.begin(), levels_in.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.front() < 1 || levels.back() > kMaxWeight)
    throw InvalidArgumentError("weight levels must be in [1, 2^32-1]");

  SearchContext ctx;
  ctx.levels = levels;
  ctx.oracle_budget = oracle_budget;
  ctx.result.max_edges = max_edges;
  ctx.result.budget = budget;
  ctx.result.seed = seed;

  const std::uint32_t max_n = max_edges + 1;
  const std::uint32_t level_count = static_cast<std::uint32_t>(levels.size());

  // Exhaustive tier: sizes whose full shape x weighting space fits in the
  // remaining budget, smallest first.
  std::uint64_t remaining = budget;
  std::uint32_t first_sampled_n = 2;
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    const std::uint64_t shapes = count_free_trees(n);
    const std::uint64_t weightings = saturating_pow(level_count, n - 1);
    if (weightings > UINT64_MAX / shapes) break;
    const std::uint64_t cost = shapes * weightings;
    if (cost > remaining) break;
    remaining -= cost;
    first_sampled_n = n + 1;

    std::vector<Weight> weights(n - 1);
    for_each_free_tree(n, [&](std::span<const VertexId> parents) {
      std::vector<std::uint32_t> digits(n - 1, 0);
      do {
        for (std::uint32_t i = 0; i < n - 1; ++i)
          weights[i] = levels[digits[i]];
        ctx.consider(tree_from_parents(n, parents, weights));
      } while (next_assignment(digits, level_count));
    });
  }
  ctx.result.space_exhausted = first_sampled_n > max_n;

  // Sampling tier: split what is left of the budget evenly across the
  // remaining sizes; candidates are random labeled trees with weights drawn
  // from the level set, each derived from its own sub-seed.
  if (first_sampled_n <= max_n && remaining > 0) {
    const std::uint64_t sizes = max_n - first_sampled_n + 1;
    const std::uint64_t per_size = remaining / sizes;
    std::uint64_t candidate_index = 0;
    for (std::uint32_t n = first_sampled_n; n <= max_n; ++n) {
      for (std::uint64_t j = 0; j < per_size; ++j, ++candidate_index) {
        Rng rng(mix_seed(seed, candidate_index));
        std::vector<Edge> edges = random_tree_edges(n, rng);
        for (Edge& e : edges)
          e.w = levels[rng.uniform_u32(0, level_count - 1)];
        ctx.consider(WeightedGraph(n, std::move(edges)));
      }
    }
  }

  return ctx.result;
}

}  // namespace mec
