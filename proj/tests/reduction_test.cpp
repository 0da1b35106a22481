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


#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "l1cut/formula.hpp"
#include "l1cut/hypermetric.hpp"
#include "l1cut/l1_oracle.hpp"
#include "l1cut/reduction.hpp"

namespace l1cut {
namespace {

K2nWeights weights(std::vector<std::int64_t> zero, std::vector<std::int64_t> one) {
  K2nWeights w;
  for (auto v : zero) w.to_zero.emplace_back(v);
  for (auto v : one) w.to_one.emplace_back(v);
  return w;
}

// Unit-edge paths between 0 and 1; path p has its B-vertex 2 + p at
// offset b_offsets[p].
PathSystem make_system(const std::vector<std::size_t>& lengths, const std::vector<std::size_t>& b_offsets) {
  const std::size_t n = lengths.size();
  std::size_t total = n + 2;
  for (auto len : lengths) total += len - 2;
  PathSystem s;
  s.graph = WeightedGraph(total);
  Vertex next = n + 2;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Vertex> path{0};
    for (std::size_t j = 1; j < lengths[p]; ++j) path.push_back(j == b_offsets[p] ? p + 2 : next++);
    path.push_back(1);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) s.graph.add_edge(path[j], path[j + 1], rat(1));
    s.paths.push_back(path);
    s.b_vertices.push_back(p + 2);
  }
  s.trace.source_size = n + 2;
  s.trace.target_size = total;
  return s;
}

TEST(ScaleAndSubdivide, UnitWeightsGivePathsOfLengthFour) {
  const auto s = scale_and_subdivide(K2nWeights::unit(3), Rat(0));
  EXPECT_EQ(s.scale, 2);
  ASSERT_EQ(s.paths.size(), 3u);
  for (std::size_t p = 0; p < 3; ++p) {
    EXPECT_EQ(s.path_length(p), 4u);
    EXPECT_EQ(s.b_offset(p), 2u);
  }
  EXPECT_EQ(s.graph.vertex_count(), 5u + 6u);
}

TEST(ScaleAndSubdivide, FractionalWeights) {
  K2nWeights w{{rat(1, 3)}, {rat(2, 3)}};
  const auto s = scale_and_subdivide(w, Rat(0));
  EXPECT_EQ(s.scale, 6);
  EXPECT_EQ(s.b_offset(0), 2u);
  EXPECT_EQ(s.path_length(0), 6u);
}

TEST(ScaleAndSubdivide, PreservesScaledMetricOnOriginals) {
  K2nWeights w{{rat(1, 2), rat(3, 4), rat(2)}, {rat(5, 4), rat(1), rat(1, 4)}};
  const auto s = scale_and_subdivide(w, Rat(0));
  const auto sub = shortest_path_metric(s.graph);
  const auto base = w.metric();
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = x + 1; y < 5; ++y) EXPECT_EQ(sub(x, y), s.scale * base(x, y));
  }
}

TEST(ScaleAndSubdivide, EpsilonSimplifiesAndGuardRefuses) {
  K2nWeights w{{rat(1001, 1000)}, {rat(1)}};
  EXPECT_THROW(scale_and_subdivide(w, Rat(0), {100, {}}), GuardError);
  const auto s = scale_and_subdivide(w, rat(1, 100));
  EXPECT_EQ(s.scale, 2);
  EXPECT_THROW(scale_and_subdivide(weights({0}, {1}), Rat(0)), InputError);
}

TEST(PadToEven, DuplicatesLastPath) {
  const auto s = pad_to_even(scale_and_subdivide(K2nWeights::unit(3), Rat(0)));
  ASSERT_EQ(s.paths.size(), 4u);
  EXPECT_EQ(s.path_length(3), 4u);
  EXPECT_EQ(s.b_offset(3), 2u);
  const auto d = shortest_path_metric(s.graph);
  EXPECT_EQ(d(s.b_vertices[2], s.b_vertices[3]), 4);
  const auto even = pad_to_even(scale_and_subdivide(K2nWeights::unit(2), Rat(0)));
  EXPECT_EQ(even.paths.size(), 2u);
}

TEST(Shrink, ContractsBoundaryOfR) {
  const auto s = make_system({4, 6}, {2, 3});
  const std::vector<Vertex> r{s.paths[1][2]};
  const auto out = shrink_step(s.graph, s.paths[1], r);
  EXPECT_EQ(out.contracted_edges, 2u);
  EXPECT_EQ(out.removed_length, 2);
  EXPECT_EQ(out.path.size() - 1, 4u);
  EXPECT_EQ(out.map[0], 0u);
  EXPECT_EQ(out.map[1], 1u);
  EXPECT_EQ(shortest_path_metric(out.graph)(0, 1), 4);
}

TEST(Shrink, Preconditions) {
  const auto s = make_system({4, 6}, {2, 3});
  const std::vector<Vertex> r{s.paths[0][1]};
  EXPECT_THROW(shrink_step(s.graph, s.paths[0], r), InputError);
  const std::vector<Vertex> none;
  EXPECT_THROW(shrink_step(s.graph, s.paths[1], none), InputError);
  const std::vector<Vertex> terminal{0};
  EXPECT_THROW(shrink_step(s.graph, s.paths[1], terminal), InputError);
  std::vector<Vertex> everything(s.paths[1].begin() + 1, s.paths[1].end() - 1);
  EXPECT_THROW(shrink_step(s.graph, s.paths[1], everything), InputError);
}

TEST(Shrink, RefusesToMergeEnds) {
  const auto s = make_system({2, 6}, {1, 3});
  // Offsets 1, 3 and 5 are each isolated in R and swallow all six edges.
  const std::vector<Vertex> r{s.paths[1][1], s.paths[1][3], s.paths[1][5]};
  EXPECT_THROW(shrink_step(s.graph, s.paths[1], r), InputError);
}

TEST(Equalize, FourFourSix) {
  const auto s = equalize_paths(make_system({4, 4, 6}, {2, 2, 3}));
  for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(s.path_length(p), 4u);
  std::size_t shrinks = 0;
  for (const auto& step : s.trace.steps) shrinks += step.kind == StepKind::shrink;
  EXPECT_EQ(shrinks, 1u);
  EXPECT_EQ(s.trace.steps.back().kind, StepKind::relabel);
}

TEST(Equalize, TwoEight) {
  auto s = equalize_paths(make_system({2, 8}, {1, 4}));
  EXPECT_EQ(s.path_length(0), 2u);
  EXPECT_EQ(s.path_length(1), 2u);
  const auto theta = as_theta(s);
  EXPECT_EQ(theta.k(), 1u);
  EXPECT_EQ(theta.ell(), 1u);
  // The B-vertex of the long path survives as the midpoint.
  EXPECT_EQ(s.b_offset(1), 1u);
}

TEST(ShrinkSet, FarSideFirstThenNearSide) {
  const std::vector<Vertex> path{0, 10, 11, 12, 13, 14, 15, 16, 1};
  // Far side only: the last two edges.
  EXPECT_EQ(detail::far_side_shrink_set(path, 4, 2), (std::vector<Vertex>{16}));
  // Three far edges and three near edges; the B-vertex sits inside R.
  const auto r = detail::far_side_shrink_set(path, 4, 6);
  EXPECT_EQ(r, (std::vector<Vertex>{10, 12, 13, 14, 16}));
  const auto system = make_system({2, 8}, {1, 4});
  const auto shrunk = shrink_step(system.graph, system.paths[1],
                                  detail::far_side_shrink_set(system.paths[1], 4, 6));
  EXPECT_EQ(shrunk.contracted_edges, 6u);
  EXPECT_EQ(shrunk.path.size(), 3u);
  EXPECT_THROW(detail::far_side_shrink_set(path, 4, 8), InputError);
  const std::vector<Vertex> short_path{0, 10, 11, 12, 1};
  EXPECT_THROW(detail::far_side_shrink_set(short_path, 2, 2), InputError);
}

TEST(Equalize, AlreadyEqualOnlyRelabels) {
  const auto s = equalize_paths(make_system({4, 4}, {2, 2}));
  ASSERT_EQ(s.trace.steps.size(), 1u);
  EXPECT_EQ(s.trace.steps[0].kind, StepKind::relabel);
  EXPECT_EQ(shortest_path_metric(as_theta(s).graph), shortest_path_metric(s.graph));
}

TEST(Equalize, RejectsOddCommonLength) {
  EXPECT_THROW(equalize_paths(make_system({3, 5}, {1, 2})), InputError);
  EXPECT_THROW(equalize_paths(make_system({4, 5}, {2, 2})), InputError);
}

TEST(Trace, ComposeFollowsOriginals) {
  const auto s = equalize_paths(pad_to_even(scale_and_subdivide(weights({1, 1, 1}, {1, 1, 2}), Rat(0))));
  const auto images = s.trace.compose();
  ASSERT_EQ(images.size(), 5u);
  EXPECT_EQ(images[0], 0u);
  EXPECT_EQ(images[1], 1u);
  for (Vertex v = 2; v < 5; ++v) ASSERT_TRUE(images[v].has_value());
}

TEST(Pipeline, UnitInstancesMatchFormula) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto r = embed_weighted_instance(K2nWeights::unit(n), Rat(0));
    EXPECT_EQ(r.report.distortion, c1_k2n(n)) << n;
    EXPECT_EQ(r.k, (n + 1) / 2);
    EXPECT_EQ(r.ell, 2u);
    EXPECT_EQ(r.trace.steps.back().kind, StepKind::restrict);
    EXPECT_EQ(r.measure.universe_size(), n + 2);
  }
}

TEST(Pipeline, UnitK21IsIsometric) {
  EXPECT_EQ(embed_weighted_instance(K2nWeights::unit(1), Rat(0)).report.distortion, 1);
}

TEST(Pipeline, BoundedByOracleAndCertificate) {
  const std::vector<K2nWeights> instances{
      weights({1, 1, 1, 2}, {2, 2, 2, 2}), weights({1, 1, 2, 2}, {1, 2, 2, 2}), weights({1, 1}, {1, 3}),
      weights({1, 2, 3}, {3, 2, 1}), K2nWeights{{rat(1, 3)}, {rat(2, 3)}}};
  for (const auto& w : instances) {
    const auto r = embed_weighted_instance(w, Rat(0));
    const auto oracle = exact_c1(w.metric());
    ASSERT_EQ(oracle.status, OracleStatus::optimal);
    EXPECT_LE(oracle.optimum_D, r.report.distortion);
    EXPECT_LE(search_b_vectors(w.metric(), 1).bound, oracle.optimum_D);
  }
}

TEST(Pipeline, WeightedExampleMeasuredValues) {
  // The oracle optimum is 7/6; the pulled-back construction measures 2.
  const auto w = weights({1, 1, 1, 2}, {2, 2, 2, 2});
  EXPECT_EQ(exact_c1(w.metric()).optimum_D, rat(7, 6));
  EXPECT_EQ(embed_weighted_instance(w, Rat(0)).report.distortion, 2);
}

TEST(Pipeline, RandomInstancesAreSound) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> len(1, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 4;
    K2nWeights w;
    for (std::size_t b = 0; b < n; ++b) {
      w.to_zero.emplace_back(len(rng));
      w.to_one.emplace_back(len(rng));
    }
    const auto r = embed_weighted_instance(w, Rat(0));
    EXPECT_GE(r.report.distortion, exact_c1(w.metric()).optimum_D);
    EXPECT_EQ(distortion_report(w.metric(), materialize_coordinates(r.measure)).distortion, r.report.distortion);
  }
}

}  // namespace
}  // namespace l1cut
