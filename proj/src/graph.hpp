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
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mec {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr VertexId kNoVertex = UINT32_MAX;
inline constexpr EdgeIndex kNoEdge = UINT32_MAX;

/// Largest accepted edge weight. Keeps any sum of class weights well inside
/// uint64 for every representable instance.
inline constexpr Weight kMaxWeight = 0xFFFFFFFFULL;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0;

  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with positive integer edge weights. Vertices are
/// dense ids 0..n-1; edges keep the index order they were constructed with.
/// Immutable after construction.
class WeightedGraph {
 public:
  /// Validates all invariants (no self-loops, no duplicate pairs, ids in
  /// range, weights in [1, kMaxWeight]); throws InvalidArgumentError.
  WeightedGraph(std::uint32_t n, std::vector<Edge> edges);

  /// Reads the instance text format:
  ///   line 1: "n m", then m lines "u v w".
  /// Lines starting with '#' and blank lines are skipped. Throws ParseError
  /// carrying the offending 1-based line number.
  static WeightedGraph parse(std::string_view text);

  /// Emits the instance text format, edges in index order, trailing newline.
  std::string serialize() const;

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint32_t edge_count() const noexcept {
    return static_cast<std::uint32_t>(edges_.size());
  }
  const Edge& edge(EdgeIndex i) const { return edges_[i]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Edge indices incident to u, ascending by edge index.
  std::span<const EdgeIndex> incident(VertexId u) const;
  std::uint32_t degree(VertexId u) const;
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  /// The ordering E_u: incident edges sorted by non-increasing weight,
  /// ties broken by ascending edge index.
  std::vector<EdgeIndex> sorted_incidence(VertexId u) const;

  bool operator==(const WeightedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeIndex> incidence_;     // CSR payload
  std::vector<std::uint32_t> offsets_;   // CSR offsets, size n_+1
  std::uint32_t max_degree_ = 0;
};

/// A graph together with a rooting: parent links and a DFS pre-order in
/// which children are visited in ascending edge-index order.
struct TreeView {
  const WeightedGraph* graph = nullptr;
  VertexId root = 0;
  std::vector<VertexId> parent_vertex;  // kNoVertex for the root
  std::vector<EdgeIndex> parent_edge;   // kNoEdge for the root
  std::vector<VertexId> preorder;
};

/// Checks that g is a tree and roots it. Reports "not connected" and
/// "edge count != n-1" as distinct defects (connectivity is checked first).
/// Throws NotATreeError, or InvalidArgumentError for an out-of-range root.
TreeView validate_tree(const WeightedGraph& g, VertexId root);

/// Non-throwing variant of the tree check.
bool is_tree(const WeightedGraph& g);

/// A partition of the edge set into matchings. class_weights[i] is the
/// maximum edge weight in classes[i]; total is their sum.
struct ColoringSolution {
  std::vector<std::vector<EdgeIndex>> classes;
  std::vector<Weight> class_weights;
  Weight total = 0;

  std::uint32_t class_count() const noexcept {
    return static_cast<std::uint32_t>(classes.size());
  }
};

/// Builds a ColoringSolution from raw classes, computing weights and total.
/// Edge indices must be in range; no other validation is performed.
ColoringSolution make_solution(const WeightedGraph& g,
                               std::vector<std::vector<EdgeIndex>> classes);

struct SolutionViolation {
  enum class Kind {
    kEmptyClass,
    kEdgeOutOfRange,
    kDuplicateEdge,
    kNonMatching,
    kMissingEdge,
    kWeightMismatch,
    kTotalMismatch,
  };
  Kind kind;
  std::string detail;
};

/// Checks every ColoringSolution invariant against g. Returns the first
/// violation found (naming class and edges), or nullopt if the solution is
/// valid. Never throws.
std::optional<SolutionViolation> validate_solution(const WeightedGraph& g,
                                                   const ColoringSolution& s);

/// Solution text format: line i holds the space-separated edge indices of
/// class i.
std::string serialize_solution(const ColoringSolution& s);

/// Parses the solution text format against g (indices must be < m). The
/// result is not validated beyond index range; run validate_solution.
ColoringSolution parse_solution(const WeightedGraph& g, std::string_view text);

}  // namespace mec
