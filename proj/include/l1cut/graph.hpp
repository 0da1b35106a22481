// Copyright 2026 The l1cut Authors
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

// Weighted graphs, finite metrics, and the two graph families the library is
// built around: unit-weight K_{2,n} and the subdivided theta graph K_{2,2k}^ell.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/error.hpp"
#include "l1cut/rational.hpp"

namespace l1cut {

using Vertex = std::size_t;

/// Dense symmetric n x n table.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  const T& operator()(std::size_t x, std::size_t y) const { return data_[x * n_ + y]; }

  void set(std::size_t x, std::size_t y, const T& value) {
    data_[x * n_ + y] = value;
    data_[y * n_ + x] = value;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

struct Edge {
  Vertex u;
  Vertex v;
  Rat weight;
};

/// Undirected simple graph with nonnegative rational edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// (neighbor, edge index) pairs.
  const std::vector<std::pair<Vertex, std::size_t>>& neighbors(Vertex v) const {
    return adjacency_.at(v);
  }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const {
    for (const auto& [w, index] : adjacency_.at(u)) {
      if (w == v) return index;
    }
    return std::nullopt;
  }

  void add_edge(Vertex u, Vertex v, Rat weight) {
    if (u >= vertex_count() || v >= vertex_count()) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    if (weight < 0) {
      throw InputError("negative edge weight");
    }
    if (find_edge(u, v)) {
      throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].emplace_back(v, edges_.size());
    adjacency_[v].emplace_back(u, edges_.size());
    edges_.push_back(Edge{u, v, std::move(weight)});
  }

 private:
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacency_;
  std::vector<Edge> edges_;
};

/// Returns a triple (x, y, z) with d(x, z) > d(x, y) + d(y, z), if any.
inline std::optional<std::array<Vertex, 3>> find_triangle_violation(const SymMatrix<Rat>& d) {
  const std::size_t n = d.size();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      for (Vertex z = 0; z < n; ++z) {
        if (d(x, z) > d(x, y) + d(y, z)) {
          return std::array<Vertex, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

/// A metric on points 0..n-1 with strictly positive off-diagonal distances.
class FiniteMetric {
 public:
  FiniteMetric() = default;

  /// Validates symmetry, zero diagonal, positivity and every triangle.
  static FiniteMetric from_matrix(SymMatrix<Rat> dist) {
    const std::size_t n = dist.size();
    for (Vertex x = 0; x < n; ++x) {
      if (dist(x, x) != 0) {
        throw InputError("nonzero diagonal entry at point " + std::to_string(x));
      }
      for (Vertex y = x + 1; y < n; ++y) {
        if (dist(x, y) <= 0) {
          throw InputError("non-positive distance between points " + std::to_string(x) +
                           " and " + std::to_string(y));
        }
      }
    }
    if (const auto bad = find_triangle_violation(dist)) {
      const auto [a, b, c] = *bad;
      throw InputError("triangle inequality violated: d(" + std::to_string(a) + "," +
                       std::to_string(c) + ") > d(" + std::to_string(a) + "," +
                       std::to_string(b) + ") + d(" + std::to_string(b) + "," +
                       std::to_string(c) + ")");
    }
    FiniteMetric m;
    m.dist_ = std::move(dist);
    return m;
  }

  /// Validating constructor from nested rows; rows must be symmetric.
  static FiniteMetric from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t n = rows.size();
    SymMatrix<Rat> d(n);
    for (Vertex x = 0; x < n; ++x) {
      if (rows[x].size() != n) {
        throw InputError("distance matrix is not square");
      }
      for (Vertex y = 0; y < n; ++y) {
        if (rows[x][y] != rows[y][x]) {
          throw InputError("distance matrix is not symmetric at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
        }
      }
      for (Vertex y = x; y < n; ++y) d.set(x, y, rows[x][y]);
    }
    return from_matrix(std::move(d));
  }

  std::size_t size() const noexcept { return dist_.size(); }
  const Rat& operator()(Vertex x, Vertex y) const { return dist_(x, y); }
  const SymMatrix<Rat>& matrix() const noexcept { return dist_; }

  FiniteMetric scaled(const Rat& factor) const {
    if (factor <= 0) {
      throw InputError("metric scale factor must be positive");
    }
    SymMatrix<Rat> d(size());
    for (Vertex x = 0; x < size(); ++x) {
      for (Vertex y = x + 1; y < size(); ++y) d.set(x, y, dist_(x, y) * factor);
    }
    FiniteMetric m;
    m.dist_ = std::move(d);
    return m;
  }

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  SymMatrix<Rat> dist_;
};

/// Exact single-source shortest-path distances (Dijkstra over Rat);
/// unreachable vertices are nullopt.
inline std::vector<std::optional<Rat>> shortest_distances_from(const WeightedGraph& g,
                                                               Vertex source) {
  std::vector<std::optional<Rat>> dist(g.vertex_count());
  using Entry = std::pair<Rat, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist.at(source) = Rat(0);
  queue.emplace(Rat(0), source);
  std::vector<bool> settled(g.vertex_count(), false);
  while (!queue.empty()) {
    auto [du, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (const auto& [v, index] : g.neighbors(u)) {
      Rat candidate = du + g.edges()[index].weight;
      if (!dist[v] || candidate < *dist[v]) {
        dist[v] = candidate;
        queue.emplace(std::move(candidate), v);
      }
    }
  }
  return dist;
}

/// All-pairs shortest-path metric. Requires a connected graph whose distinct
/// vertices are at positive distance (zero-weight edges must be quotiented
/// away by the caller).
inline FiniteMetric shortest_path_metric(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (e.weight == 0) {
      throw InputError("zero-weight edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " collapses two points");
    }
  }
  SymMatrix<Rat> d(n);
  for (Vertex x = 0; x < n; ++x) {
    const auto row = shortest_distances_from(g, x);
    for (Vertex y = x + 1; y < n; ++y) {
      if (!row[y]) {
        throw InputError("graph is disconnected: no path between " + std::to_string(x) +
                         " and " + std::to_string(y));
      }
      d.set(x, y, *row[y]);
    }
  }
  return FiniteMetric::from_matrix(std::move(d));
}

/// The induced submetric on `points`, in the given order.
inline FiniteMetric restrict_metric(const FiniteMetric& m, std::span<const Vertex> points) {
  std::vector<bool> seen(m.size(), false);
  for (Vertex p : points) {
    if (p >= m.size()) {
      throw InputError("restriction index " + std::to_string(p) + " out of range");
    }
    if (seen[p]) {
      throw InputError("duplicate restriction index " + std::to_string(p));
    }
    seen[p] = true;
  }
  SymMatrix<Rat> d(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) d.set(i, j, m(points[i], points[j]));
  }
  return FiniteMetric::from_matrix(std::move(d));
}

/// Unit-weight K_{2,n}: vertices 0 and 1 form side A, vertices 2..n+1 side B.
inline WeightedGraph build_k2n(std::size_t n) {
  if (n == 0) {
    throw InputError("K_{2,n} needs n >= 1");
  }
  WeightedGraph g(n + 2);
  for (Vertex b = 2; b < n + 2; ++b) {
    g.add_edge(0, b, Rat(1));
    g.add_edge(1, b, Rat(1));
  }
  return g;
}

/// Vertex numbering of K_{2,2k}^ell.
///
/// Terminals are 0 and 1. Paths are indexed 1..2k and each interior vertex
/// is addressed by its offset j in [1, 2ell-1], the number of edges between
/// it and terminal 0 along its own path. The label of (path i, offset j) is
/// (2ell-1)(i-1) + j + 1, which is the zero-based path formula
/// (2ell-1)i' + j' + 2 with i' = i-1 and j' = j-1. Terminal 0 sits at offset
/// 0 and terminal 1 at offset 2ell of every path. The midpoint (offset ell)
/// of path i is its B-vertex.
class ThetaLayout {
 public:
  struct Position {
    bool terminal;
    std::size_t path;    // 1-based; 0 for terminals
    std::size_t offset;  // 0 for terminal 0, 2ell for terminal 1
  };

  ThetaLayout(std::size_t k, std::size_t ell) : k_(k), ell_(ell) {
    if (k == 0 || ell == 0) {
      throw InputError("theta graph needs k >= 1 and ell >= 1");
    }
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t path_count() const noexcept { return 2 * k_; }
  std::size_t path_length() const noexcept { return 2 * ell_; }
  std::size_t interior_per_path() const noexcept { return 2 * ell_ - 1; }
  std::size_t vertex_count() const noexcept { return 2 + path_count() * interior_per_path(); }

  Vertex vertex_at(std::size_t path, std::size_t offset) const {
    if (offset == 0) return 0;
    if (offset == path_length()) return 1;
    if (path == 0 || path > path_count() || offset > path_length()) {
      throw InputError("theta position out of range");
    }
    return interior_per_path() * (path - 1) + offset + 1;
  }

  Position locate(Vertex v) const {
    if (v >= vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " is not in the theta graph");
    }
    if (v == 0) return {true, 0, 0};
    if (v == 1) return {true, 0, path_length()};
    return {false, (v - 2) / interior_per_path() + 1, (v - 2) % interior_per_path() + 1};
  }

  /// Vertices of path i from terminal 0 to terminal 1, inclusive.
  std::vector<Vertex> path_vertices(std::size_t path) const {
    std::vector<Vertex> out;
    out.reserve(path_length() + 1);
    for (std::size_t j = 0; j <= path_length(); ++j) out.push_back(vertex_at(path, j));
    return out;
  }

 private:
  std::size_t k_;
  std::size_t ell_;
};

struct ThetaGraph {
  ThetaLayout layout;
  WeightedGraph graph;

  std::size_t k() const noexcept { return layout.k(); }
  std::size_t ell() const noexcept { return layout.ell(); }
};

/// K_{2,2k}^ell: 2k internally disjoint unit paths of length 2ell between
/// terminals 0 and 1.
inline ThetaGraph build_theta(std::size_t k, std::size_t ell) {
  ThetaLayout layout(k, ell);
  WeightedGraph g(layout.vertex_count());
  for (std::size_t i = 1; i <= layout.path_count(); ++i) {
    const auto path = layout.path_vertices(i);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) g.add_edge(path[j], path[j + 1], Rat(1));
  }
  return ThetaGraph{layout, std::move(g)};
}

}  // namespace l1cut
