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

/// The rank-weight profile y_1 >= y_2 >= ... >= y_delta, where y_i is the
/// heaviest edge among those ranked i in some vertex's sorted incidence
/// list. y[0] is y_1 and always equals the maximum edge weight.
struct RankProfile {
  std::vector<Weight> y;

  std::uint32_t delta() const noexcept {
    return static_cast<std::uint32_t>(y.size());
  }
};

/// Computes the rank profile. Only vertices of degree >= i contribute to
/// y_i. An empty edge set yields the empty profile.
RankProfile rank_weights(const WeightedGraph& g);

/// Sum of the rank profile: a lower bound on the optimal coloring cost.
/// Any solution needs at least delta classes (a maximum-degree vertex's
/// edges pairwise conflict) and the i-th heaviest class costs at least y_i.
Weight lower_bound(const RankProfile& profile);
Weight lower_bound(const WeightedGraph& g);

}  // namespace mec
