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

#include "enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace mec {
namespace {

// True when following parent links from every vertex reaches vertex 0,
// i.e. the parent array describes a tree rooted at 0.
bool reaches_root(std::span<const VertexId> parents) {
  const std::uint32_t n = static_cast<std::uint32_t>(parents.size()) + 1;
  // state: 0 unknown, 1 on current walk, 2 known good
  std::vector<std::uint8_t> state(n, 0);
  state[0] = 2;
  std::vector<VertexId> walk;
  for (VertexId v = 1; v < n; ++v) {
    walk.clear();
    VertexId cur = v;
    while (state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = parents[cur - 1];
    }
    if (state[cur] == 1) return false;  // cycle
    for (VertexId w : walk) state[w] = 2;
  }
  return true;
}

// Beyer-Hedetniemi successor over canonical level sequences; enumerates
// every rooted (unordered) tree shape on n vertices exactly once.
template <typename Fn>
void for_each_rooted_level_sequence(std::uint32_t n, Fn&& fn) {
  if (n == 0) return;
  std::vector<std::uint32_t> level(n);
  for (std::uint32_t i = 0; i < n; ++i) level[i] = i + 1;  // the path
  while (true) {
    fn(level);
    std::uint32_t p = n;
    while (p > 0 && level[p - 1] <= 2) --p;
    if (p == 0) break;
    --p;  // last index with level > 2
    std::uint32_t q = p;
    while (level[q] != level[p] - 1) --q;  // parent position of p
    for (std::uint32_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
}

ParentArray parents_from_levels(const std::vector<std::uint32_t>& level) {
  const std::uint32_t n = static_cast<std::uint32_t>(level.size());
  ParentArray parents(n > 0 ? n - 1 : 0);
  for (std::uint32_t i = 1; i < n; ++i) {
    std::uint32_t j = i;
    while (level[j] != level[i] - 1) --j;
    parents[i - 1] = j;
  }
  return parents;
}

std::vector<std::vector<VertexId>> adjacency_of(std::uint32_t n,
                                                std::span<const VertexId> parents) {
  std::vector<std::vector<VertexId>> adj(n);
  for (std::uint32_t i = 1; i < n; ++i) {
    adj[parents[i - 1]].push_back(i);
    adj[i].push_back(parents[i - 1]);
  }
  return adj;
}

std::vector<VertexId> centroids_of(const std::vector<std::vector<VertexId>>& adj) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  if (n == 1) return {0};
  std::vector<std::uint32_t> degree(n);
  std::vector<VertexId> peel;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(adj[v].size());
    if (degree[v] <= 1) peel.push_back(v);
  }
  std::uint32_t remaining = n;
  while (remaining > 2) {
    std::vector<VertexId> next;
    remaining -= static_cast<std::uint32_t>(peel.size());
    for (VertexId v : peel)
      for (VertexId w : adj[v])
        if (degree[w] > 1 && --degree[w] == 1) next.push_back(w);
    for (VertexId v : peel) degree[v] = 0;
    peel = std::move(next);
  }
  return peel;
}

std::string ahu_signature(const std::vector<std::vector<VertexId>>& adj,
                          VertexId v, VertexId parent) {
  std::vector<std::string> children;
  for (VertexId w : adj[v])
    if (w != parent) children.push_back(ahu_signature(adj, w, v));
  std::sort(children.begin(), children.end());
  std::string sig = "(";
  for (const std::string& c : children) sig += c;
  sig += ')';
  return sig;
}

// Canonical form of a tree shape irrespective of labeling: the smaller AHU
// signature over its centroid rootings.
std::string free_canonical_form(std::uint32_t n,
                                std::span<const VertexId> parents) {
  auto adj = adjacency_of(n, parents);
  std::string best;
  for (VertexId c : centroids_of(adj)) {
    std::string sig = ahu_signature(adj, c, kNoVertex);
    if (best.empty() || sig < best) best = std::move(sig);
  }
  return best;
}

}  // namespace

std::uint64_t for_each_labeled_tree(
    std::uint32_t n,
    const std::function<void(std::span<const VertexId>)>& fn) {
  if (n == 0) return 0;
  if (n == 1) {
    fn({});
    return 1;
  }
  // Odometer over parent choices: digit d for vertex i maps to parent d if
  // d < i, else d+1 (skipping the self-loop).
  std::vector<std::uint32_t> digits(n - 1, 0);
  ParentArray parents(n - 1);
  std::uint64_t count = 0;
  while (true) {
    for (std::uint32_t i = 1; i < n; ++i) {
      std::uint32_t d = digits[i - 1];
      parents[i - 1] = (d < i) ? d : d + 1;
    }
    if (reaches_root(parents)) {
      fn(parents);
      ++count;
    }
    if (!next_assignment(digits, n - 1)) break;
  }
  return count;
}

std::uint64_t for_each_free_tree(
    std::uint32_t n,
    const std::function<void(std::span<const VertexId>)>& fn) {
  if (n == 0) return 0;
  std::uint64_t count = 0;
  std::unordered_set<std::string> seen;
  for_each_rooted_level_sequence(n, [&](const std::vector<std::uint32_t>& level) {
    ParentArray parents = parents_from_levels(level);
    if (seen.insert(free_canonical_form(n, parents)).second) {
      fn(parents);
      ++count;
    }
  });
  return count;
}

std::uint64_t count_free_trees(std::uint32_t n) {
  return for_each_free_tree(n, [](std::span<const VertexId>) {});
}

bool next_assignment(std::span<std::uint32_t> digits, std::uint32_t base) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

WeightedGraph tree_from_parents(std::uint32_t n,
                                std::span<const VertexId> parents,
                                std::span<const Weight> weights) {
  if (parents.size() + 1 != n || weights.size() != parents.size())
    throw InvalidArgumentError("parent/weight array size must be n-1");
  std::vector<Edge> edges;
  edges.reserve(parents.size());
  for (std::uint32_t i = 0; i < parents.size(); ++i)
    edges.push_back(Edge{parents[i], i + 1, weights[i]});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace mec
