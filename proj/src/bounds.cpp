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

#include "bounds.hpp"

#include <algorithm>

namespace mec {

RankProfile rank_weights(const WeightedGraph& g) {
  RankProfile profile;
  profile.y.assign(g.max_degree(), 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto order = g.sorted_incidence(u);
    for (std::size_t i = 0; i < order.size(); ++i)
      profile.y[i] = std::max(profile.y[i], g.edge(order[i]).w);
  }
  return profile;
}

Weight lower_bound(const RankProfile& profile) {
  Weight sum = 0;
  for (Weight y : profile.y) sum += y;
  return sum;
}

Weight lower_bound(const WeightedGraph& g) {
  return lower_bound(rank_weights(g));
}

}  // namespace mec
