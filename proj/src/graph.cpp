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

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace mec {
namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct LineScanner {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // Returns the next non-blank, non-comment line, or nullopt at EOF.
  std::optional<std::string_view> next() {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_u64(std::string_view field, std::uint64_t& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

WeightedGraph::WeightedGraph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_)
      throw InvalidArgumentError("edge " + std::to_string(i) +
                                 ": vertex id out of range");
    if (e.u == e.v)
      throw InvalidArgumentError("edge " + std::to_string(i) + ": self-loop");
    if (e.w < 1 || e.w > kMaxWeight)
      throw InvalidArgumentError("edge " + std::to_string(i) +
                                 ": weight out of range");
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw InvalidArgumentError("edge " + std::to_string(i) +
                                 ": duplicate vertex pair");
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::uint32_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(edges_.size() * 2);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    incidence_[cursor[edges_[i].u]++] = i;
    incidence_[cursor[edges_[i].v]++] = i;
  }
  for (std::uint32_t v = 0; v < n_; ++v)
    max_degree_ = std::max(max_degree_, offsets_[v + 1] - offsets_[v]);
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
  LineScanner scanner{text};

  auto header = scanner.next();
  if (!header)
    throw ParseError(ParseErrorKind::kMalformed, scanner.line_no + 1,
                     "missing header line \"n m\"");
  auto head_fields = split_fields(*header);
  std::uint64_t n64 = 0, m64 = 0;
  if (head_fields.size() != 2 || !parse_u64(head_fields[0], n64) ||
      !parse_u64(head_fields[1], m64))
    throw ParseError(ParseErrorKind::kMalformed, scanner.line_no,
                     "header must be two integers \"n m\"");
  if (n64 > UINT32_MAX || m64 > UINT32_MAX)
    throw ParseError(ParseErrorKind::kMalformed, scanner.line_no,
                     "n or m too large");
  const std::uint32_t n = static_cast<std::uint32_t>(n64);
  const std::uint32_t m = static_cast<std::uint32_t>(m64);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);

  for (std::uint32_t i = 0; i < m; ++i) {
    auto line = scanner.next();
    if (!line)
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, scanner.line_no + 1,
                       "expected " + std::to_string(m) + " edges, found " +
                           std::to_string(i));
    auto fields = split_fields(*line);
    std::uint64_t u = 0, v = 0, w = 0;
    if (fields.size() != 3 || !parse_u64(fields[0], u) ||
        !parse_u64(fields[1], v) || !parse_u64(fields[2], w))
      throw ParseError(ParseErrorKind::kMalformed, scanner.line_no,
                       "edge line must be three integers \"u v w\"");
    if (u >= n || v >= n)
      throw ParseError(ParseErrorKind::kVertexOutOfRange, scanner.line_no,
                       "vertex id out of range (n=" + std::to_string(n) + ")");
    if (u == v)
      throw ParseError(ParseErrorKind::kSelfLoop, scanner.line_no,
                       "self-loop at vertex " + std::to_string(u));
    if (w < 1)
      throw ParseError(ParseErrorKind::kBadWeight, scanner.line_no,
                       "weight must be a positive integer");
    if (w > kMaxWeight)
      throw ParseError(ParseErrorKind::kBadWeight, scanner.line_no,
                       "weight exceeds supported maximum");
    if (!seen.insert(pair_key(static_cast<VertexId>(u),
                              static_cast<VertexId>(v)))
             .second)
      throw ParseError(ParseErrorKind::kDuplicateEdge, scanner.line_no,
                       "duplicate edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v),
                         w});
  }

  if (auto extra = scanner.next())
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, scanner.line_no,
                     "more edge lines than declared (m=" + std::to_string(m) +
                         ")");

  return WeightedGraph(n, std::move(edges));
}

std::string WeightedGraph::serialize() const {
  std::string out;
  out.reserve(16 + edges_.size() * 12);
  out += std::to_string(n_);
  out += ' ';
  out += std::to_string(edges_.size());
  out += '\n';
  for (const Edge& e : edges_) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.w);
    out += '\n';
  }
  return out;
}

std::span<const EdgeIndex> WeightedGraph::incident(VertexId u) const {
  if (u >= n_) throw InvalidArgumentError("vertex id out of range");
  return {incidence_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::uint32_t WeightedGraph::degree(VertexId u) const {
  if (u >= n_) throw InvalidArgumentError("vertex id out of range");
  return offsets_[u + 1] - offsets_[u];
}

std::vector<EdgeIndex> WeightedGraph::sorted_incidence(VertexId u) const {
  auto inc = incident(u);
  std::vector<EdgeIndex> order(inc.begin(), inc.end());
  std::sort(order.begin(), order.end(), [this](EdgeIndex a, EdgeIndex b) {
    if (edges_[a].w != edges_[b].w) return edges_[a].w > edges_[b].w;
    return a < b;
  });
  return order;
}

TreeView validate_tree(const WeightedGraph& g, VertexId root) {
  const std::uint32_t n = g.vertex_count();
  if (root >= n) throw InvalidArgumentError("root vertex out of range");

  TreeView view;
  view.graph = &g;
  view.root = root;
  view.parent_vertex.assign(n, kNoVertex);
  view.parent_edge.assign(n, kNoEdge);
  view.preorder.reserve(n);

  std::vector<bool> visited(n, false);
  std::vector<VertexId> stack{root};
  visited[root] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    view.preorder.push_back(v);
    auto inc = g.incident(v);
    // Push in reverse so children pop in ascending edge-index order.
    for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
      const Edge& e = g.edge(*it);
      VertexId other = (e.u == v) ? e.v : e.u;
      if (visited[other]) continue;
      visited[other] = true;
      view.parent_vertex[other] = v;
      view.parent_edge[other] = *it;
      stack.push_back(other);
    }
  }

  if (view.preorder.size() != n)
    throw NotATreeError(TreeDefect::kNotConnected,
                        "graph is not connected: reached " +
                            std::to_string(view.preorder.size()) + " of " +
                            std::to_string(n) + " vertices");
  if (g.edge_count() != n - 1)
    throw NotATreeError(TreeDefect::kEdgeCountWrong,
                        "edge count " + std::to_string(g.edge_count()) +
                            " != n-1 = " + std::to_string(n - 1));
  return view;
}

bool is_tree(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return false;
  try {
    validate_tree(g, 0);
    return true;
  } catch (const NotATreeError&) {
    return false;
  }
}

ColoringSolution make_solution(const WeightedGraph& g,
                               std::vector<std::vector<EdgeIndex>> classes) {
  ColoringSolution s;
  s.classes = std::move(classes);
  s.class_weights.reserve(s.classes.size());
  for (const auto& cls : s.classes) {
    Weight w = 0;
    for (EdgeIndex e : cls) {
      if (e >= g.edge_count())
        throw InvalidArgumentError("edge index out of range in solution");
      w = std::max(w, g.edge(e).w);
    }
    s.class_weights.push_back(w);
    s.total += w;
  }
  return s;
}

std::optional<SolutionViolation> validate_solution(const WeightedGraph& g,
                                                   const ColoringSolution& s) {
  using Kind = SolutionViolation::Kind;
  const std::uint32_t m = g.edge_count();
  if (s.class_weights.size() != s.classes.size())
    return SolutionViolation{Kind::kWeightMismatch,
                             "class_weights size differs from class count"};

  std::vector<bool> assigned(m, false);
  Weight total = 0;
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    const auto& cls = s.classes[c];
    if (cls.empty())
      return SolutionViolation{Kind::kEmptyClass,
                               "class " + std::to_string(c) + " is empty"};
    Weight max_w = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      EdgeIndex e = cls[i];
      if (e >= m)
        return SolutionViolation{
            Kind::kEdgeOutOfRange,
            "class " + std::to_string(c) + ": edge index " +
                std::to_string(e) + " out of range"};
      if (assigned[e])
        return SolutionViolation{
            Kind::kDuplicateEdge,
            "edge " + std::to_string(e) + " appears more than once (class " +
                std::to_string(c) + ")"};
      assigned[e] = true;
      max_w = std::max(max_w, g.edge(e).w);
      for (std::size_t j = 0; j < i; ++j) {
        const Edge& a = g.edge(cls[j]);
        const Edge& b = g.edge(e);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
          return SolutionViolation{
              Kind::kNonMatching,
              "class " + std::to_string(c) + " is not a matching: edges " +
                  std::to_string(cls[j]) + " and " + std::to_string(e) +
                  " share a vertex"};
      }
    }
    if (s.class_weights[c] != max_w)
      return SolutionViolation{
          Kind::kWeightMismatch,
          "class " + std::to_string(c) + ": declared weight " +
              std::to_string(s.class_weights[c]) + " != max edge weight " +
              std::to_string(max_w)};
    total += max_w;
  }
  for (EdgeIndex e = 0; e < m; ++e)
    if (!assigned[e])
      return SolutionViolation{
          Kind::kMissingEdge,
          "edge " + std::to_string(e) + " not assigned to any class"};
  if (s.total != total)
    return SolutionViolation{
        Kind::kTotalMismatch,
        "declared total " + std::to_string(s.total) +
            " != sum of class weights " + std::to_string(total)};
  return std::nullopt;
}

std::string serialize_solution(const ColoringSolution& s) {
  std::string out;
  for (const auto& cls : s.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cls[i]);
    }
    out += '\n';
  }
  return out;
}

ColoringSolution parse_solution(const WeightedGraph& g,
                                std::string_view text) {
  std::vector<std::vector<EdgeIndex>> classes;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    bool last_fragment = false;
    if (end == std::string_view::npos) {
      end = text.size();
      last_fragment = true;
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (last_fragment && line.empty()) break;
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == '#') continue;

    std::vector<EdgeIndex> cls;
    for (std::string_view field : split_fields(line)) {
      std::uint64_t idx = 0;
      if (!parse_u64(field, idx))
        throw ParseError(ParseErrorKind::kMalformed, line_no,
                         "expected an edge index, got \"" +
                             std::string(field) + "\"");
      if (idx >= g.edge_count())
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "edge index " + std::to_string(idx) +
                             " out of range (m=" +
                             std::to_string(g.edge_count()) + ")");
      cls.push_back(static_cast<EdgeIndex>(idx));
    }
    classes.push_back(std::move(cls));
  }
  return make_solution(g, std::move(classes));
}

}  // namespace mec
