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

// Reduction of a rational-weighted K_{2,n} to the theta graph K_{2,2k}^ell,
// and the pull-back of the theta embedding to the original vertices.
//
// Pipeline: approximate and scale the weights to even integers, subdivide
// every edge into unit edges, duplicate a path when n is odd, shrink every
// path to the common shortest length 2 ell, relabel into theta numbering,
// embed with d1 and read it back on the original vertices. The outcome is
// judged by its measured distortion against the original metric.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1cut/cut_measure.hpp"
#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/rational.hpp"
#include "l1cut/theta_embedding.hpp"

namespace l1cut {

/// Edge weights of K_{2,n}; entry b belongs to the B-vertex 2 + b.
struct K2nWeights {
  std::vector<Rat> to_zero;
  std::vector<Rat> to_one;

  static K2nWeights unit(std::size_t n) {
    return K2nWeights{std::vector<Rat>(n, Rat(1)), std::vector<Rat>(n, Rat(1))};
  }

  std::size_t n() const noexcept { return to_zero.size(); }

  void validate() const {
    if (to_zero.empty() || to_zero.size() != to_one.size()) {
      throw InputError("K_{2,n} weights need n >= 1 entries on each side");
    }
    for (std::size_t b = 0; b < n(); ++b) {
      if (to_zero[b] <= 0 || to_one[b] <= 0) {
        throw InputError("edge weights at B-vertex " + std::to_string(b + 2) +
                         " must be positive");
      }
    }
  }

  WeightedGraph graph() const {
    validate();
    WeightedGraph g(n() + 2);
    for (std::size_t b = 0; b < n(); ++b) {
      g.add_edge(0, b + 2, to_zero[b]);
      g.add_edge(1, b + 2, to_one[b]);
    }
    return g;
  }

  FiniteMetric metric() const { return shortest_path_metric(graph()); }
};

enum class StepKind { scale, subdivide, pad, shrink, relabel, restrict };

inline const char* step_name(StepKind kind) {
  switch (kind) {
    case StepKind::scale: return "scale";
    case StepKind::subdivide: return "subdivide";
    case StepKind::pad: return "pad";
    case StepKind::shrink: return "shrink";
    case StepKind::relabel: return "relabel";
    case StepKind::restrict: return "restrict";
  }
  return "?";
}

/// One reduction step. `map[v]` is the image of input vertex v in the
/// step's output, or nullopt when the step drops it.
struct TraceStep {
  StepKind kind;
  std::map<std::string, std::string> parameters;
  std::vector<std::optional<Vertex>> map;
  std::vector<Vertex> path;        // shrink only: the path P
  std::vector<Vertex> contracted;  // shrink only: the set R
};

struct ReductionTrace {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<TraceStep> steps;

  /// Image of every source vertex through all steps.
  std::vector<std::optional<Vertex>> compose() const {
    std::vector<std::optional<Vertex>> image(source_size);
    for (Vertex v = 0; v < source_size; ++v) image[v] = v;
    for (const auto& step : steps) {
      for (auto& slot : image) {
        if (!slot) continue;
        if (*slot >= step.map.size()) {
          throw VerificationError(std::string("trace step '") + step_name(step.kind) +
                                  "' has no image for vertex " + std::to_string(*slot));
        }
        slot = step.map[*slot];
      }
    }
    return image;
  }
};

namespace detail {

inline std::vector<std::optional<Vertex>> identity_map(std::size_t from) {
  std::vector<std::optional<Vertex>> map(from);
  for (Vertex v = 0; v < from; ++v) map[v] = v;
  return map;
}

}  // namespace detail

/// A unit-weight union of internally disjoint paths between terminals 0
/// and 1; path p passes through its B-vertex b_vertices[p].
struct PathSystem {
  WeightedGraph graph;
  std::vector<std::vector<Vertex>> paths;  // each from 0 to 1 inclusive
  std::vector<Vertex> b_vertices;
  ReductionTrace trace;
  Rat scale = 1;

  std::size_t path_length(std::size_t p) const { return paths.at(p).size() - 1; }

  std::size_t b_offset(std::size_t p) const {
    const auto& path = paths.at(p);
    const auto it = std::find(path.begin(), path.end(), b_vertices.at(p));
    if (it == path.end()) {
      throw VerificationError("B-vertex missing from its path");
    }
    return static_cast<std::size_t>(it - path.begin());
  }
};

struct ReductionGuard {
  std::size_t max_vertices = 100000;
  CutGuard cuts;
};

/// Approximates every weight within relative error `epsilon` (0 keeps them
/// exact), scales by twice the common denominator so every length is an
/// even integer, and replaces each edge by a path of unit edges. Original
/// vertices keep their indices; subdivision vertices follow.
inline PathSystem scale_and_subdivide(const K2nWeights& weights, const Rat& epsilon,
                                      ReductionGuard guard = {}) {
  weights.validate();
  const std::size_t n = weights.n();
  std::vector<Rat> zero_side;
  std::vector<Rat> one_side;
  Integer common = 1;
  for (std::size_t b = 0; b < n; ++b) {
    zero_side.push_back(approximate(weights.to_zero[b], epsilon));
    one_side.push_back(approximate(weights.to_one[b], epsilon));
    common = lcm(common, denominator_of(zero_side.back()));
    common = lcm(common, denominator_of(one_side.back()));
  }
  const Rat scale = Rat(2 * common);

  std::vector<std::size_t> zero_len;
  std::vector<std::size_t> one_len;
  Integer total_vertices = n + 2;
  for (std::size_t b = 0; b < n; ++b) {
    const Integer t0 = numerator_of(zero_side[b] * scale);
    const Integer t1 = numerator_of(one_side[b] * scale);
    total_vertices += t0 + t1 - 2;
    if (total_vertices > guard.max_vertices) {
      throw GuardError("subdivision would exceed " + std::to_string(guard.max_vertices) +
                       " vertices; use a coarser epsilon");
    }
    zero_len.push_back(t0.convert_to<std::size_t>());
    one_len.push_back(t1.convert_to<std::size_t>());
  }

  PathSystem out;
  out.scale = scale;
  out.graph = WeightedGraph(total_vertices.convert_to<std::size_t>());
  Vertex next = n + 2;
  for (std::size_t b = 0; b < n; ++b) {
    const Vertex bv = b + 2;
    std::vector<Vertex> path{0};
    for (std::size_t s = 1; s < zero_len[b]; ++s) path.push_back(next++);
    path.push_back(bv);
    for (std::size_t s = 1; s < one_len[b]; ++s) path.push_back(next++);
    path.push_back(1);
    for (std::size_t s = 0; s + 1 < path.size(); ++s) out.graph.add_edge(path[s], path[s + 1], Rat(1));
    out.paths.push_back(std::move(path));
    out.b_vertices.push_back(bv);
  }

  out.trace.source_size = n + 2;
  TraceStep scale_step{StepKind::scale, {}, detail::identity_map(n + 2), {}, {}};
  scale_step.parameters["factor"] = to_string(scale);
  scale_step.parameters["epsilon"] = to_string(epsilon);
  for (std::size_t b = 0; b < n; ++b) {
    const std::string key = std::to_string(b + 2);
    scale_step.parameters["0-" + key] = to_string(zero_side[b]);
    scale_step.parameters["1-" + key] = to_string(one_side[b]);
  }
  out.trace.steps.push_back(std::move(scale_step));

  TraceStep subdivide{StepKind::subdivide, {}, detail::identity_map(n + 2), {}, {}};
  subdivide.parameters["vertex_count"] = std::to_string(out.graph.vertex_count());
  for (std::size_t b = 0; b < n; ++b) {
    subdivide.parameters["length_" + std::to_string(b + 2)] = std::to_string(out.path_length(b));
  }
  out.trace.steps.push_back(std::move(subdivide));
  out.trace.target_size = out.graph.vertex_count();
  return out;
}

/// Duplicates the last path (and its B-vertex) when the path count is odd.
/// The copy adds no shortcut, so distances among existing vertices are
/// unchanged.
inline PathSystem pad_to_even(PathSystem system) {
  if (system.paths.size() % 2 == 0) return system;
  const std::size_t source = system.paths.size() - 1;
  const auto original = system.paths[source];
  const std::size_t old_count = system.graph.vertex_count();
  const std::size_t added = original.size() - 2;

  WeightedGraph grown(old_count + added);
  for (const Edge& e : system.graph.edges()) grown.add_edge(e.u, e.v, e.weight);
  std::vector<Vertex> copy{0};
  Vertex new_b = 0;
  for (std::size_t s = 1; s + 1 < original.size(); ++s) {
    const Vertex fresh = old_count + s - 1;
    if (original[s] == system.b_vertices[source]) new_b = fresh;
    copy.push_back(fresh);
  }
  copy.push_back(1);
  for (std::size_t s = 0; s + 1 < copy.size(); ++s) grown.add_edge(copy[s], copy[s + 1], Rat(1));

  TraceStep step{StepKind::pad, {}, detail::identity_map(old_count), {}, {}};
  step.parameters["duplicated_b"] = std::to_string(system.b_vertices[source]);
  step.parameters["new_b"] = std::to_string(new_b);
  system.trace.steps.push_back(std::move(step));
  system.trace.target_size = grown.vertex_count();

  system.graph = std::move(grown);
  system.paths.push_back(std::move(copy));
  system.b_vertices.push_back(new_b);
  return system;
}

struct ShrinkResult {
  WeightedGraph graph;
  std::vector<std::optional<Vertex>> map;
  std::vector<Vertex> path;  // image of the shrunk path
  std::size_t contracted_edges = 0;
  Rat removed_length;
};

/// Contracts every edge between R and the rest of the graph. R must be a
/// nonempty proper subset of the interior of `path`, whose interior vertices
/// all have degree 2, and `path` must be strictly longer than the distance
/// between its ends. Quotient vertices are numbered by their smallest
/// member, so vertices 0 and 1 keep their labels.
inline ShrinkResult shrink_step(const WeightedGraph& g, std::span<const Vertex> path,
                                std::span<const Vertex> contracted) {
  if (path.size() < 3) {
    throw InputError("shrink needs a path with an interior");
  }
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  Rat length = 0;
  for (std::size_t s = 0; s < path.size(); ++s) {
    if (path[s] >= n || on_path[path[s]]) {
      throw InputError("shrink path repeats or leaves the graph");
    }
    on_path[path[s]] = true;
    if (s + 1 < path.size()) {
      const auto edge = g.find_edge(path[s], path[s + 1]);
      if (!edge) {
        throw InputError("shrink path uses a missing edge " + std::to_string(path[s]) + "-" +
                         std::to_string(path[s + 1]));
      }
      length += g.edges()[*edge].weight;
    }
    if (s > 0 && s + 1 < path.size() && g.degree(path[s]) != 2) {
      throw InputError("shrink path is not loose: interior vertex " + std::to_string(path[s]) +
                       " has degree " + std::to_string(g.degree(path[s])));
    }
  }

  std::vector<bool> in_r(n, false);
  std::size_t interior_hits = 0;
  for (Vertex v : contracted) {
    const auto it = std::find(path.begin() + 1, path.end() - 1, v);
    if (it == path.end() - 1) {
      throw InputError("shrink set member " + std::to_string(v) + " is not an interior path vertex");
    }
    if (!in_r[v]) ++interior_hits;
    in_r[v] = true;
  }
  if (interior_hits == 0 || interior_hits == path.size() - 2) {
    throw InputError("shrink set must be a nonempty proper subset of the path interior");
  }

  const auto reach = shortest_distances_from(g, path.front());
  if (!reach[path.back()] || length <= *reach[path.back()]) {
    throw InputError("shrink path is already a shortest path between its ends");
  }

  // Union-find over the contracted edges.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  ShrinkResult result;
  std::vector<bool> contract_edge(g.edges().size(), false);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    if (in_r[edge.u] != in_r[edge.v]) {
      contract_edge[e] = true;
      ++result.contracted_edges;
      result.removed_length += edge.weight;
      const Vertex ru = find(edge.u);
      const Vertex rv = find(edge.v);
      if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
  }
  if (find(path.front()) == find(path.back())) {
    throw InputError("shrink would merge the ends of the path");
  }

  // Roots are the smallest members, so numbering roots in order numbers
  // classes by their smallest member.
  std::vector<std::optional<Vertex>> class_label(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (find(v) == v) class_label[v] = next++;
  }
  result.map.resize(n);
  for (Vertex v = 0; v < n; ++v) result.map[v] = class_label[find(v)];

  std::map<std::pair<Vertex, Vertex>, Rat> quotient_edges;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (contract_edge[e]) continue;
    const Edge& edge = g.edges()[e];
    Vertex a = *result.map[edge.u];
    Vertex b = *result.map[edge.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto [it, inserted] = quotient_edges.try_emplace({a, b}, edge.weight);
    if (!inserted && edge.weight < it->second) it->second = edge.weight;
  }
  result.graph = WeightedGraph(next);
  for (const auto& [ends, weight] : quotient_edges) result.graph.add_edge(ends.first, ends.second, weight);

  for (Vertex v : path) {
    const Vertex image = *result.map[v];
    if (result.path.empty() || result.path.back() != image) result.path.push_back(image);
  }
  return result;
}

namespace detail {

/// Choice of R for shrinking one path of a PathSystem by `excess` (even)
/// edges. The contracted edges are the last c1 edges of the path, taken
/// first, and then the first c0 edges, so that at least one edge survives
/// on each side of the B-vertex. An edge is contracted exactly when R
/// changes across it, which fixes R: offset j is in R when an odd number of
/// contracted edges precede it. A component of R may contain the B-vertex.
inline std::vector<Vertex> far_side_shrink_set(const std::vector<Vertex>& path, std::size_t b_offset,
                                               std::size_t excess) {
  const std::size_t length = path.size() - 1;
  const std::size_t far_room = length - b_offset - 1;
  const std::size_t near_room = b_offset - 1;
  if (b_offset == 0 || b_offset >= length || far_room + near_room < excess) {
    throw InputError("path too short on both sides of its B-vertex to shrink by " +
                     std::to_string(excess));
  }
  std::size_t far = std::min(excess, far_room);
  std::size_t near = excess - far;
  if (near == 1 && far == 1) {
    // R would be the whole interior; move both contractions to one side.
    if (near_room >= 2) {
      near = 2;
      far = 0;
    } else {
      throw InputError("no proper shrink set removes 2 edges from a path of length " +
                       std::to_string(length));
    }
  }
  std::vector<Vertex> out;
  for (std::size_t j = 1; j < length; ++j) {
    const std::size_t flips = std::min(j, near) + (j > length - far ? j - (length - far) : 0);
    if (flips % 2 == 1) out.push_back(path[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void apply_map(PathSystem& system, const std::vector<std::optional<Vertex>>& map) {
  for (auto& path : system.paths) {
    std::vector<Vertex> mapped;
    for (Vertex v : path) {
      const Vertex image = *map[v];
      if (mapped.empty() || mapped.back() != image) mapped.push_back(image);
    }
    path = std::move(mapped);
  }
  for (auto& b : system.b_vertices) b = *map[b];
}

}  // namespace detail

/// Shrinks every path to the common minimum length, which must be even,
/// then relabels into theta numbering: path p (1-based) at offset j becomes
/// (2 ell - 1)(p - 1) + j + 1.
inline PathSystem equalize_paths(PathSystem system) {
  if (system.paths.empty()) {
    throw InputError("no paths to equalize");
  }
  std::size_t target = system.path_length(0);
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    const auto& path = system.paths[p];
    if (path.size() < 2 || path.front() != 0 || path.back() != 1) {
      throw InputError("every path must run from terminal 0 to terminal 1");
    }
    target = std::min(target, system.path_length(p));
  }
  if (target % 2 != 0 || target < 2) {
    throw InputError("common path length " + std::to_string(target) +
                     " is odd; the theta construction needs an even length");
  }
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    const std::size_t excess = system.path_length(p) - target;
    if (excess == 0) continue;
    if (excess % 2 != 0) {
      throw InputError("path lengths differ by an odd amount");
    }
    const auto r = detail::far_side_shrink_set(system.paths[p], system.b_offset(p), excess);
    auto shrunk = shrink_step(system.graph, system.paths[p], r);
    TraceStep step{StepKind::shrink, {}, shrunk.map, system.paths[p], r};
    step.parameters["contracted_edges"] = std::to_string(shrunk.contracted_edges);
    step.parameters["new_length"] = std::to_string(shrunk.path.size() - 1);
    system.trace.steps.push_back(std::move(step));
    system.graph = std::move(shrunk.graph);
    detail::apply_map(system, shrunk.map);
    system.trace.target_size = system.graph.vertex_count();
  }

  const std::size_t ell = target / 2;
  const std::size_t per_path = 2 * ell - 1;
  const std::size_t count = 2 + system.paths.size() * per_path;
  if (system.graph.vertex_count() != count) {
    throw InputError("paths are not internally disjoint or the graph has extra vertices");
  }
  std::vector<std::optional<Vertex>> relabel(count);
  relabel[0] = 0;
  relabel[1] = 1;
  for (std::size_t p = 0; p < system.paths.size(); ++p) {
    for (std::size_t j = 1; j < target; ++j) {
      const Vertex v = system.paths[p][j];
      if (relabel[v]) {
        throw InputError("paths share interior vertex " + std::to_string(v));
      }
      relabel[v] = per_path * p + j + 1;
    }
  }
  WeightedGraph renamed(count);
  for (const Edge& e : system.graph.edges()) renamed.add_edge(*relabel[e.u], *relabel[e.v], e.weight);

  TraceStep step{StepKind::relabel, {}, relabel, {}, {}};
  step.parameters["ell"] = std::to_string(ell);
  step.parameters["paths"] = std::to_string(system.paths.size());
  system.trace.steps.push_back(std::move(step));
  system.graph = std::move(renamed);
  detail::apply_map(system, relabel);
  return system;
}

/// The equalized system as K_{2,2k}^ell; checks it edge for edge.
inline ThetaGraph as_theta(const PathSystem& system) {
  if (system.paths.size() % 2 != 0) {
    throw InputError("odd number of paths; pad before converting to a theta graph");
  }
  const std::size_t k = system.paths.size() / 2;
  const std::size_t ell = system.path_length(0) / 2;
  ThetaGraph theta = build_theta(k, ell);
  if (theta.graph.vertex_count() != system.graph.vertex_count() ||
      theta.graph.edges().size() != system.graph.edges().size()) {
    throw VerificationError("equalized graph does not have the theta shape");
  }
  for (const Edge& e : system.graph.edges()) {
    if (e.weight != 1 || !theta.graph.find_edge(e.u, e.v)) {
      throw VerificationError("equalized graph has an edge outside the theta graph");
    }
  }
  return theta;
}

struct PipelineResult {
  CutMeasure measure;  // on the original n + 2 vertices
  DistortionReport report;
  ReductionTrace trace;
  FiniteMetric metric;  // original weighted metric
  std::size_t k = 0;
  std::size_t ell = 0;
};

/// Full reduction, embedding and pull-back. A contracted original vertex
/// takes the coordinates of the vertex it was merged into.
inline PipelineResult embed_weighted_instance(const K2nWeights& weights, const Rat& epsilon,
                                              ReductionGuard guard = {}) {
  PipelineResult result;
  result.metric = weights.metric();
  const std::size_t originals = weights.n() + 2;

  PathSystem system = equalize_paths(pad_to_even(scale_and_subdivide(weights, epsilon, guard)));
  const ThetaGraph theta = as_theta(system);
  result.k = theta.k();
  result.ell = theta.ell();

  const auto images = system.trace.compose();
  std::vector<Vertex> points;
  for (Vertex v = 0; v < originals; ++v) points.push_back(*images[v]);
  result.measure = combine_d1(result.k, result.ell, points, guard.cuts);

  TraceStep restrict_step{StepKind::restrict, {}, {}, {}, {}};
  restrict_step.map.resize(theta.graph.vertex_count());
  for (Vertex v = 0; v < originals; ++v) restrict_step.map[points[v]] = v;
  restrict_step.parameters["kept"] = std::to_string(originals);
  system.trace.steps.push_back(std::move(restrict_step));
  system.trace.target_size = originals;
  result.trace = std::move(system.trace);

  result.report = distortion_report(result.metric, result.measure);
  return result;
}

}  // namespace l1cut
