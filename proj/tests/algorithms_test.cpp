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

#include "algorithms.hpp"

#include <algorithm>

#include "bounds.hpp"
#include "doctest.h"
#include "instances.hpp"
#include "support/fixtures.hpp"
#include "support/naive_mec.hpp"

using namespace mec;

namespace {

// Rebuilds the classes a trace describes and checks they match the emitted
// solution.
void check_trace_consistency(const WeightedGraph& g, const AlgorithmRun& run) {
  std::vector<std::vector<EdgeIndex>> classes;
  std::vector<bool> seen(g.edge_count(), false);
  for (const TraceStep& step : run.trace.steps) {
    REQUIRE(step.edge < g.edge_count());
    CHECK_FALSE(seen[step.edge]);
    seen[step.edge] = true;
    if (step.chosen_class >= classes.size()) {
      REQUIRE(step.chosen_class == classes.size());
      classes.emplace_back();
    }
    classes[step.chosen_class].push_back(step.edge);
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  CHECK(classes == run.solution.classes);
}

void check_class_chain(const WeightedGraph& g, const ColoringSolution& sol,
                 const RankProfile& profile) {
  REQUIRE(sol.class_count() == g.max_degree());
  std::vector<Weight> weights = sol.class_weights;
  std::sort(weights.rbegin(), weights.rend());
  if (!weights.empty()) CHECK(weights[0] <= profile.y[0]);
  for (std::size_t i = 1; i < weights.size(); ++i)
    CHECK(weights[i] <= profile.y[i - 1]);
}

}  // namespace

TEST_CASE("algorithm1 on a single edge") {
  WeightedGraph g = WeightedGraph::parse("2 1\n0 1 9\n");
  AlgorithmRun run = algorithm1(validate_tree(g, 0));
  CHECK(run.solution.class_count() == 1);
  CHECK(run.solution.total == 9);
}

TEST_CASE("algorithm1 on a star fills classes heaviest first") {
  WeightedGraph g = testing::make_star({7, 5, 2});
  AlgorithmRun run = algorithm1(validate_tree(g, 0));
  REQUIRE(run.solution.class_count() == 3);
  CHECK(run.solution.class_weights == std::vector<Weight>{7, 5, 2});
  CHECK(run.solution.total == 14);
}

TEST_CASE("algorithm1 pairs the wrong edges on the heavy-light path") {
  WeightedGraph g = testing::heavy_light_path();
  AlgorithmRun run = algorithm1(validate_tree(g, 0));
  REQUIRE(run.solution.class_count() == 2);
  CHECK(run.solution.classes[0] == std::vector<EdgeIndex>{0, 2});
  CHECK(run.solution.classes[1] == std::vector<EdgeIndex>{1, 3});
  CHECK(run.solution.class_weights == std::vector<Weight>{100, 100});
  CHECK(run.solution.total == 200);
  // Hand-traced first-fit steps, frozen: (edge, class, inspected).
  REQUIRE(run.trace.steps.size() == 4);
  CHECK(run.trace.steps[0].edge == 0);
  CHECK(run.trace.steps[0].chosen_class == 0);
  CHECK(run.trace.steps[1].edge == 1);
  CHECK(run.trace.steps[1].chosen_class == 1);
  CHECK(run.trace.steps[1].inspected == 1);
  CHECK(run.trace.steps[2].edge == 2);
  CHECK(run.trace.steps[2].chosen_class == 0);
  CHECK(run.trace.steps[3].edge == 3);
  CHECK(run.trace.steps[3].chosen_class == 1);
  // The brute-force optimum is 102, so this instance realizes ratio ~2.
  CHECK(testing::naive_exact_mec(g).opt == 102);
}

TEST_CASE("kk_greedy on the heavy-light path is optimal") {
  WeightedGraph g = testing::heavy_light_path();
  AlgorithmRun run = kk_greedy(g);
  REQUIRE(run.solution.class_count() == 3);
  CHECK(run.solution.classes[0] == std::vector<EdgeIndex>{0, 3});
  CHECK(run.solution.class_weights == std::vector<Weight>{100, 1, 1});
  CHECK(run.solution.total == 102);
  // Processing order is weight-descending with index tie-break: 0,3,1,2.
  REQUIRE(run.trace.steps.size() == 4);
  CHECK(run.trace.steps[0].edge == 0);
  CHECK(run.trace.steps[1].edge == 3);
  CHECK(run.trace.steps[1].chosen_class == 0);
  CHECK(run.trace.steps[2].edge == 1);
  CHECK(run.trace.steps[2].chosen_class == 1);
  CHECK(run.trace.steps[3].edge == 2);
  CHECK(run.trace.steps[3].chosen_class == 2);
  CHECK(run.trace.steps[3].inspected == 2);
}

TEST_CASE("kk_greedy on simple instances") {
  CHECK(kk_greedy(WeightedGraph::parse("2 1\n0 1 9\n")).solution.total == 9);
  CHECK(kk_greedy(testing::make_star({7, 5, 2})).solution.total == 14);
}

TEST_CASE("kk_greedy handles non-trees") {
  WeightedGraph g = testing::make_cycle(4);
  AlgorithmRun run = kk_greedy(g);
  CHECK_FALSE(validate_solution(g, run.solution).has_value());
  CHECK(run.solution.class_count() <= 2 * g.max_degree() - 1);
}

TEST_CASE("best_of picks kk on the heavy-light path") {
  WeightedGraph g = testing::heavy_light_path();
  BestOfRun run = best_of(validate_tree(g, 0));
  CHECK(run.chosen == AlgorithmTag::kKk);
  CHECK(run.solution.total == 102);
  CHECK(run.alg1.solution.total == 200);
}

TEST_CASE("best_of breaks ties toward algorithm1") {
  WeightedGraph star = testing::make_star({7, 5, 2});
  BestOfRun run = best_of(validate_tree(star, 0));
  CHECK(run.chosen == AlgorithmTag::kAlg1);
  CHECK(run.solution.total == 14);

  WeightedGraph single = WeightedGraph::parse("2 1\n0 1 9\n");
  BestOfRun run2 = best_of(validate_tree(single, 0));
  CHECK(run2.chosen == AlgorithmTag::kAlg1);
  CHECK(run2.solution.total == 9);
}

TEST_CASE("empty tree yields the empty solution") {
  WeightedGraph g(1, {});
  AlgorithmRun run = algorithm1(validate_tree(g, 0));
  CHECK(run.solution.class_count() == 0);
  CHECK(run.solution.total == 0);
  CHECK(kk_greedy(g).solution.total == 0);
}

TEST_CASE("algorithm1 guarantees hold on random trees for every root") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    WeightedGraph g = gen_random_tree(2 + seed % 12, 1, 50, seed * 977 + 11);
    RankProfile profile = rank_weights(g);
    // Chain bound summed: W <= y_1 + sum_{i<delta} y_i.
    Weight chain_total = profile.y.empty() ? 0 : profile.y[0];
    for (std::size_t i = 0; i + 1 < profile.y.size(); ++i)
      chain_total += profile.y[i];
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      AlgorithmRun run = algorithm1(validate_tree(g, root));
      CHECK_FALSE(validate_solution(g, run.solution).has_value());
      check_class_chain(g, run.solution, profile);
      check_trace_consistency(g, run);
      CHECK(run.solution.total <= chain_total);
    }
  }
}

TEST_CASE("kk_greedy emits valid solutions within the class bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    WeightedGraph g = gen_random_tree(2 + seed % 12, 1, 50, seed * 31);
    AlgorithmRun run = kk_greedy(g);
    CHECK_FALSE(validate_solution(g, run.solution).has_value());
    CHECK(run.solution.class_count() <= 2 * g.max_degree() - 1);
    check_trace_consistency(g, run);
  }
  // Non-trees: trees densified with extra random edges.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    WeightedGraph base = gen_random_tree(6 + seed % 6, 1, 9, seed * 13 + 5);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (VertexId u = 0; u < base.vertex_count() && edges.size() < base.vertex_count() + 2; ++u)
      for (VertexId v = u + 1; v < base.vertex_count(); ++v) {
        bool present = false;
        for (const Edge& e : edges)
          present |= (std::min(e.u, e.v) == u && std::max(e.u, e.v) == v);
        if (!present && (u + v + seed) % 3 == 0) {
          edges.push_back(Edge{u, v, 1 + (seed % 9)});
          break;
        }
      }
    WeightedGraph g(base.vertex_count(), std::move(edges));
    AlgorithmRun run = kk_greedy(g);
    CHECK_FALSE(validate_solution(g, run.solution).has_value());
    CHECK(run.solution.class_count() <= 2 * g.max_degree() - 1);
  }
}

TEST_CASE("algorithms are deterministic") {
  WeightedGraph g = gen_random_tree(14, 1, 5, 4242);
  TreeView t = validate_tree(g, 3);
  AlgorithmRun a1 = algorithm1(t), a2 = algorithm1(t);
  CHECK(a1.solution.classes == a2.solution.classes);
  AlgorithmRun k1 = kk_greedy(g), k2 = kk_greedy(g);
  CHECK(k1.solution.classes == k2.solution.classes);
}
