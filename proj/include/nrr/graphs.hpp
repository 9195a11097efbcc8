// Copyright 2026 The nrr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file graphs.hpp
 * @brief Finite simple graphs on labels x_j / y_j.
 *
 * Two constructions matter here. G_lambda has a vertex x_h for every part h
 * of a partition and an extra y_h when h is doubled; x_h -- x_{h+1} and
 * x_h -- y_h are the edges. The infinite ladder-like graph G_i^inf on
 * {x_j, y_j : j >= 3-i} is only ever materialized as a finite prefix.
 *
 * Vertices and edges are kept sorted by (kind, index), so every iteration
 * order is deterministic.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nrr/errors.hpp"
#include "nrr/partitions.hpp"

namespace nrr {

enum class VertexKind : std::uint8_t { X = 0, Y = 1 };

struct VertexLabel {
  VertexKind kind;
  std::uint32_t index;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

  std::string to_string() const {
    return std::string(kind == VertexKind::X ? "x_" : "y_") + std::to_string(index);
  }
};

inline VertexLabel x(std::uint32_t j) { return {VertexKind::X, j}; }
inline VertexLabel y(std::uint32_t j) { return {VertexKind::Y, j}; }

inline std::ostream& operator<<(std::ostream& os, const VertexLabel& v) {
  return os << v.to_string();
}

/// Unordered edge, stored with first < second.
struct Edge {
  VertexLabel first;
  VertexLabel second;

  static Edge make(VertexLabel a, VertexLabel b) {
    if (a == b) throw InvalidInput("loop at " + a.to_string());
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::string to_string() const {
    return "(" + first.to_string() + "," + second.to_string() + ")";
  }
};

class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Validates simplicity: no loops, no repeated edges, endpoints present.
  LabeledGraph(std::vector<VertexLabel> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw InvalidInput("repeated vertex");
    for (Edge& e : edges_) {
      e = Edge::make(e.first, e.second);
      if (!has_vertex(e.first) || !has_vertex(e.second))
        throw InvalidInput("edge " + e.to_string() + " has an endpoint outside the graph");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw InvalidInput("repeated edge");
  }

  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(VertexLabel v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_edge(VertexLabel a, VertexLabel b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge::make(a, b));
  }

  /// Position of v in vertices(); v must be present.
  std::size_t index_of(VertexLabel v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw InvalidInput(v.to_string() + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Edges as pairs of positions into vertices().
  std::vector<std::pair<std::size_t, std::size_t>> indexed_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(index_of(e.first), index_of(e.second));
    return out;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<Edge> edges_;
};

inline std::ostream& operator<<(std::ostream& os, const LabeledGraph& g) {
  os << "V={";
  for (std::size_t k = 0; k < g.vertices().size(); ++k) os << (k ? "," : "") << g.vertices()[k];
  os << "} E={";
  for (std::size_t k = 0; k < g.edges().size(); ++k) os << (k ? "," : "") << g.edges()[k].to_string();
  return os << '}';
}

/// G_lambda. Defined for any partition whose parts occur at most twice;
/// non-neighborly input yields a graph with isolated vertices.
inline LabeledGraph graph_of_partition(const Partition& lambda) {
  if (lambda.max_multiplicity() > 2)
    throw InvalidInput("partition " + lambda.to_string() + " has a part of multiplicity > 2");
  std::vector<VertexLabel> vs;
  std::vector<Edge> es;
  const auto& parts = lambda.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Part h = parts[k];
    if (k > 0 && parts[k - 1] == h) {
      vs.push_back(y(h));
      es.push_back(Edge::make(x(h), y(h)));
    } else {
      vs.push_back(x(h));
      if (k > 0 && parts[k - 1] == h + 1) es.push_back(Edge::make(x(h), x(h + 1)));
    }
  }
  return LabeledGraph(std::move(vs), std::move(es));
}

/// Prefix of G_i^inf on indices 3-i..max_index.
inline LabeledGraph truncated_g_infinity(Mode mode, std::uint32_t max_index) {
  const std::uint32_t lo = min_part(mode);
  if (max_index < lo)
    throw InvalidInput("max_index must be at least " + std::to_string(lo));
  std::vector<VertexLabel> vs;
  std::vector<Edge> es;
  for (std::uint32_t j = lo; j <= max_index; ++j) {
    vs.push_back(x(j));
    vs.push_back(y(j));
    es.push_back(Edge::make(x(j), y(j)));
    if (j < max_index) es.push_back(Edge::make(x(j), x(j + 1)));
  }
  return LabeledGraph(std::move(vs), std::move(es));
}

/// Recognizes a prefix of G_i^inf, returning (mode, max_index). The empty
/// graph is not recognized.
inline std::optional<std::pair<Mode, std::uint32_t>> as_g_infinity_prefix(const LabeledGraph& g) {
  if (g.vertices().empty()) return std::nullopt;
  const VertexLabel first = g.vertices().front();
  if (first.kind != VertexKind::X || first.index < 1 || first.index > 2) return std::nullopt;
  const Mode mode = first.index == 1 ? Mode::two : Mode::one;
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  const auto max_index = static_cast<std::uint32_t>(first.index + g.vertex_count() / 2 - 1);
  if (g == truncated_g_infinity(mode, max_index)) return std::make_pair(mode, max_index);
  return std::nullopt;
}

inline LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const VertexLabel> subset) {
  for (VertexLabel v : subset)
    if (!g.has_vertex(v)) throw InvalidInput(v.to_string() + " is not a vertex of the graph");
  std::vector<VertexLabel> vs(subset.begin(), subset.end());
  std::sort(vs.begin(), vs.end());
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (std::binary_search(vs.begin(), vs.end(), e.first) &&
        std::binary_search(vs.begin(), vs.end(), e.second))
      es.push_back(e);
  return LabeledGraph(std::move(vs), std::move(es));
}

inline bool has_isolated_vertex(const LabeledGraph& g) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (auto [a, b] : g.indexed_edges()) covered[a] = covered[b] = true;
  return std::find(covered.begin(), covered.end(), false) != covered.end();
}

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace detail

/// Maximal connected induced subgraphs, ordered by their smallest vertex.
inline std::vector<LabeledGraph> connected_components(const LabeledGraph& g) {
  detail::DisjointSets sets(g.vertex_count());
  for (auto [a, b] : g.indexed_edges()) sets.unite(a, b);
  std::vector<std::vector<VertexLabel>> groups;
  std::vector<std::size_t> slot(g.vertex_count(), SIZE_MAX);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(g.vertices()[v]);
  }
  std::vector<LabeledGraph> out;
  out.reserve(groups.size());
  for (const auto& group : groups) out.push_back(induced_subgraph(g, group));
  return out;
}

inline bool is_forest(const LabeledGraph& g) {
  detail::DisjointSets sets(g.vertex_count());
  for (auto [a, b] : g.indexed_edges())
    if (!sets.unite(a, b)) return false;
  return true;
}

}  // namespace nrr
