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
#include <numeric>

namespace mec {
namespace {

/// Growable list of matchings with per-class vertex occupancy bitsets.
/// The fit test checks both endpoints, i.e. full matching feasibility.
class MatchingClasses {
 public:
  explicit MatchingClasses(std::uint32_t n) : words_((n + 63) / 64) {}

  std::uint32_t count() const {
    return static_cast<std::uint32_t>(classes_.size());
  }

  bool fits(std::uint32_t cls, const Edge& e) const {
    const auto& bits = occupancy_[cls];
    return !test(bits, e.u) && !test(bits, e.v);
  }

  /// Places the edge into the lowest-indexed class with no conflict,
  /// creating one if needed. Returns the class index.
  std::uint32_t first_fit(EdgeIndex index, const Edge& e) {
    for (std::uint32_t c = 0; c < count(); ++c) {
      if (fits(c, e)) {
        place(c, index, e);
        return c;
      }
    }
    classes_.emplace_back();
    occupancy_.emplace_back(words_, 0);
    place(count() - 1, index, e);
    return count() - 1;
  }

  std::vector<std::vector<EdgeIndex>> take_classes() {
    return std::move(classes_);
  }

 private:
  static bool test(const std::vector<std::uint64_t>& bits, VertexId v) {
    return (bits[v >> 6] >> (v & 63)) & 1;
  }

  void place(std::uint32_t cls, EdgeIndex index, const Edge& e) {
    occupancy_[cls][e.u >> 6] |= 1ULL << (e.u & 63);
    occupancy_[cls][e.v >> 6] |= 1ULL << (e.v & 63);
    classes_[cls].push_back(index);
  }

  std::vector<std::vector<EdgeIndex>> classes_;
  std::vector<std::vector<std::uint64_t>> occupancy_;
  std::size_t words_;
};

AlgorithmRun run_first_fit(const WeightedGraph& g,
                           const std::vector<EdgeIndex>& order,
                           AlgorithmTag tag) {
  MatchingClasses classes(g.vertex_count());
  AlgorithmRun run;
  run.trace.tag = tag;
  run.trace.steps.reserve(order.size());
  for (EdgeIndex e : order) {
    std::uint32_t before = classes.count();
    std::uint32_t cls = classes.first_fit(e, g.edge(e));
    // A new class means every existing one was inspected; otherwise exactly
    // the cls classes below the chosen one were rejected.
    std::uint32_t inspected = (cls == before) ? before : cls;
    run.trace.steps.push_back(TraceStep{e, cls, inspected});
  }
  run.solution = make_solution(g, classes.take_classes());
  return run;
}

}  // namespace

AlgorithmRun algorithm1(const TreeView& tree) {
  const WeightedGraph& g = *tree.graph;
  std::vector<EdgeIndex> order;
  order.reserve(g.edge_count());
  for (VertexId v : tree.preorder) {
    // E_v restricted to child edges: sorted incidence minus the parent edge.
    for (EdgeIndex e : g.sorted_incidence(v))
      if (e != tree.parent_edge[v]) order.push_back(e);
  }
  return run_first_fit(g, order, AlgorithmTag::kAlg1);
}

AlgorithmRun kk_greedy(const WeightedGraph& g) {
  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&g](EdgeIndex a, EdgeIndex b) {
    if (g.edge(a).w != g.edge(b).w) return g.edge(a).w > g.edge(b).w;
    return a < b;
  });
  return run_first_fit(g, order, AlgorithmTag::kKk);
}

BestOfRun best_of(const TreeView& tree) {
  BestOfRun best;
  best.alg1 = algorithm1(tree);
  best.kk = kk_greedy(*tree.graph);
  if (best.alg1.solution.total <= best.kk.solution.total) {
    best.chosen = AlgorithmTag::kAlg1;
    best.solution = best.alg1.solution;
  } else {
    best.chosen = AlgorithmTag::kKk;
    best.solution = best.kk.solution;
  }
  return best;
}

}  // namespace mec
