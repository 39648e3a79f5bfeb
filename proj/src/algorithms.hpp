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

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace mec {

enum class AlgorithmTag { kAlg1, kKk, kBest };

/// One first-fit placement: which edge was placed, which class it went to
/// (0-based, in class-creation order), and how many existing classes were
/// inspected and rejected before it fit.
struct TraceStep {
  EdgeIndex edge;
  std::uint32_t chosen_class;
  std::uint32_t inspected;
};

struct AlgorithmTrace {
  AlgorithmTag tag = AlgorithmTag::kAlg1;
  std::vector<TraceStep> steps;
};

struct AlgorithmRun {
  ColoringSolution solution;
  AlgorithmTrace trace;
};

/// Tree first-fit coloring. Visits vertices in pre-order; at each vertex
/// the edges to its children are inserted, heaviest first (ties by
/// ascending edge index), into the lowest-indexed class where they conflict
/// with no already-placed edge. Classes are created on demand.
///
/// On a tree with m >= 1 edges this uses exactly max_degree classes, and
/// the sorted class weights w satisfy w_1 <= y_1 and w_i <= y_{i-1}.
AlgorithmRun algorithm1(const TreeView& tree);

/// Greedy coloring for arbitrary graphs: all edges sorted by non-increasing
/// weight (ties by ascending edge index), then first-fit into the
/// lowest-indexed class with no conflict. Uses at most 2*max_degree - 1
/// classes.
AlgorithmRun kk_greedy(const WeightedGraph& g);

struct BestOfRun {
  ColoringSolution solution;  // the cheaper of the two (ties go to alg1)
  AlgorithmTag chosen = AlgorithmTag::kAlg1;
  AlgorithmRun alg1;
  AlgorithmRun kk;
};

/// Runs algorithm1 and kk_greedy and keeps the smaller total. The combined
/// result is within 3/2 of optimal on trees.
BestOfRun best_of(const TreeView& tree);

}  // namespace mec
