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

#pragma once

#include <initializer_list>
#include <vector>

#include "graph.hpp"

namespace mec::testing {

// Path 0-1-...-k with the given edge weights.
inline WeightedGraph make_path(std::initializer_list<Weight> weights) {
  std::vector<Edge> edges;
  VertexId v = 0;
  for (Weight w : weights) {
    edges.push_back(Edge{v, v + 1, w});
    ++v;
  }
  return WeightedGraph(v + 1, std::move(edges));
}

// Star with center 0 and one leaf per weight.
inline WeightedGraph make_star(std::initializer_list<Weight> weights) {
  std::vector<Edge> edges;
  VertexId leaf = 1;
  for (Weight w : weights) {
    edges.push_back(Edge{0, leaf, w});
    ++leaf;
  }
  return WeightedGraph(leaf, std::move(edges));
}

// The 4-edge path with weights (100, 1, 1, 100) used across the suite.
inline WeightedGraph heavy_light_path() {
  return make_path({100, 1, 1, 100});
}

// Cycle 0-1-2-...-(n-1)-0 with unit weights: smallest non-tree inputs.
inline WeightedGraph make_cycle(std::uint32_t n, Weight w = 1) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v)
    edges.push_back(Edge{v, (v + 1) % n, w});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace mec::testing
