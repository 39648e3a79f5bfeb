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
#include <optional>
#include <span>
#include <vector>

#include "algorithms.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace mec {

/// Uniform random labeled tree (decoded from a uniform Pruefer sequence)
/// with i.i.d. uniform integer weights in [wmin, wmax]. Deterministic in
/// the seed. Requires n >= 2 and 1 <= wmin <= wmax <= kMaxWeight.
WeightedGraph gen_random_tree(std::uint32_t n, Weight wmin, Weight wmax,
                              std::uint64_t seed);

/// The family on which the tree first-fit algorithm approaches ratio 2:
/// the 5-vertex path with weights (C, eps, eps, C). Rooted at vertex 0,
/// algorithm1 pays 2C while the optimum is C + 2*eps. Requires
/// C > eps >= 1.
WeightedGraph gen_alg1_worst(Weight big_c, Weight eps);

struct SearchWitness {
  WeightedGraph instance;
  Weight combined = 0;            // min over roots of alg1, vs kk
  Weight opt = 0;
  std::uint32_t alg1_root = 0;    // root realizing the alg1 minimum
  AlgorithmRun alg1;              // run at alg1_root
  AlgorithmRun kk;
  OptimalCertificate certificate;

  double ratio() const {
    return static_cast<double>(combined) / static_cast<double>(opt);
  }
};

struct SearchResult {
  std::optional<SearchWitness> best;
  std::uint64_t evaluated = 0;       // candidate instances scored
  std::uint64_t oracle_skipped = 0;  // candidates dropped on oracle budget
  /// True when every tree shape up to max_edges was covered with every
  /// weight assignment; false when the candidate budget forced sampling.
  bool space_exhausted = false;
  std::uint32_t max_edges = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

/// Searches for trees maximizing min(alg1 over all roots, kk) / OPT with
/// weights drawn from `levels`. Small sizes are enumerated exhaustively
/// (free-tree shapes x all weight assignments) as long as the candidate
/// budget allows; the remaining budget is spent on seeded random sampling
/// of the larger sizes. Fully deterministic in (max_edges, levels, budget,
/// seed); ties on the ratio are broken toward the lexicographically
/// smallest serialized instance. Never evaluates more than `budget`
/// candidates.
SearchResult search_combined_worst(std::uint32_t max_edges,
                                   std::span<const Weight> levels,
                                   std::uint64_t budget, std::uint64_t seed,
                                   std::uint64_t oracle_budget =
                                       kDefaultOracleBudget);

}  // namespace mec
