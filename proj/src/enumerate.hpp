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
#include <functional>
#include <span>
#include <vector>

#include "graph.hpp"

namespace mec {

/// A tree on n vertices given as a parent array: parents[i] is the parent
/// of vertex i+1 (vertex 0 is the root of the representation).
using ParentArray = std::vector<VertexId>;

/// Enumerates every labeled tree on n vertices exactly once, as parent
/// arrays rooted at vertex 0 (the rooting is a representation detail; every
/// labeled tree has exactly one such array). Candidates are odometer
/// enumerated and filtered by an acyclicity check. Returns the number of
/// trees visited, which is n^(n-2) by Cayley's formula. Intended for small
/// n only.
std::uint64_t for_each_labeled_tree(
    std::uint32_t n, const std::function<void(std::span<const VertexId>)>& fn);

/// Enumerates one representative per isomorphism class of free
/// (unlabeled) trees on n vertices, as parent arrays with parents[i] <= i.
/// Rooted shapes come from the Beyer-Hedetniemi level-sequence successor;
/// duplicates are removed with a centroid-rooted canonical form. Returns
/// the number of free trees (OEIS A000055).
std::uint64_t for_each_free_tree(
    std::uint32_t n, const std::function<void(std::span<const VertexId>)>& fn);

/// Counts without visiting.
std::uint64_t count_free_trees(std::uint32_t n);

/// Odometer step over weight assignments: digits[i] indexes into a level
/// set of size base. Returns false once the odometer wraps around.
bool next_assignment(std::span<std::uint32_t> digits, std::uint32_t base);

/// Builds the tree instance for a parent array; edge i is
/// (parents[i], i+1, weights[i]).
WeightedGraph tree_from_parents(std::uint32_t n,
                                std::span<const VertexId> parents,
                                std::span<const Weight> weights);

}  // namespace mec
