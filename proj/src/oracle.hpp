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
#include <string>

#include "bounds.hpp"
#include "graph.hpp"

namespace mec {

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Output of the exact solver: a provably optimal coloring with its classes
/// sorted by non-increasing weight.
struct OptimalCertificate {
  ColoringSolution solution;
  Weight opt = 0;
  std::uint32_t class_count = 0;        // s*
  std::uint64_t nodes_explored = 0;
  bool optimal = true;                  // false only on budget-exceeded paths
};

struct OracleOptions {
  std::uint64_t node_budget = kDefaultOracleBudget;
  /// Incumbent pruning is what makes the search fast; disabling it makes the
  /// search visit every partition of the edge set into matchings exactly
  /// once (used by enumeration-completeness tests).
  bool prune_with_incumbent = true;
  /// When set, incremented once per complete matching partition visited.
  std::uint64_t* leaf_counter = nullptr;
};

/// Exhaustive backtracking over edge-to-class assignments in restricted
/// growth form: edges are processed in index order and each edge goes into
/// an existing class where it fits or opens the next class index, which
/// eliminates class-relabeling symmetry. Branches whose committed weight
/// (sum of the open classes' current maxima) already reaches the incumbent
/// are pruned; the incumbent is seeded with the better of kk_greedy and,
/// on trees, algorithm1.
///
/// Throws OracleBudgetExceeded once more than node_budget search nodes have
/// been expanded; the error carries the best incumbent found, marked
/// non-optimal.
OptimalCertificate exact_mec(const WeightedGraph& g, const OracleOptions& options);
OptimalCertificate exact_mec(const WeightedGraph& g,
                             std::uint64_t node_budget = kDefaultOracleBudget);

class OracleBudgetExceeded : public Error {
 public:
  OracleBudgetExceeded(OptimalCertificate incumbent, std::uint64_t budget)
      : Error(ErrorCode::kBudgetExceeded,
              "oracle node budget of " + std::to_string(budget) +
                  " exceeded"),
        incumbent_(std::move(incumbent)) {}

  /// Best solution found before the budget ran out (optimal == false).
  const OptimalCertificate& incumbent() const noexcept { return incumbent_; }

 private:
  OptimalCertificate incumbent_;
};

/// Per-check result of auditing a certificate against an instance and its
/// rank profile: (a) the solution is a valid coloring, (b) the sorted class
/// weights dominate the rank profile (w_i* >= y_i for i <= delta), and
/// (c) opt is at least the rank lower bound.
struct CertificateChecks {
  bool solution_valid = false;
  bool ranks_dominated = false;
  bool lower_bound_ok = false;
  std::string detail;  // first failure, empty when all pass

  bool all_passed() const {
    return solution_valid && ranks_dominated && lower_bound_ok;
  }
};

CertificateChecks check_certificate(const WeightedGraph& g,
                                    const OptimalCertificate& cert,
                                    const RankProfile& profile);

}  // namespace mec
