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

#include <vector>

#include "l1cut/graph.hpp"

namespace l1cut {
namespace {

FiniteMetric unit_k2n(std::size_t n) { return shortest_path_metric(build_k2n(n)); }

TEST(WeightedGraph, RejectsBadEdges) {
  WeightedGraph g(3);
  g.add_edge(0, 1, rat(1));
  EXPECT_THROW(g.add_edge(0, 3, rat(1)), InputError);
  EXPECT_THROW(g.add_edge(2, 2, rat(1)), InputError);
  EXPECT_THROW(g.add_edge(1, 2, rat(-1)), InputError);
  EXPECT_THROW(g.add_edge(1, 0, rat(2)), InputError);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_TRUE(g.find_edge(1, 0).has_value());
  EXPECT_FALSE(g.find_edge(1, 2).has_value());
}

TEST(FiniteMetric, Validates) {
  EXPECT_THROW(FiniteMetric::from_rows({{0, 1}, {2, 0}}), InputError);
  EXPECT_THROW(FiniteMetric::from_rows({{1, 1}, {1, 0}}), InputError);
  EXPECT_THROW(FiniteMetric::from_rows({{0, 0}, {0, 0}}), InputError);
  try {
    FiniteMetric::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
    FAIL() << "triangle violation accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("d(0,2) > d(0,1) + d(1,2)"), std::string::npos) << e.what();
  }
}

TEST(ShortestPath, UnitK23) {
  const auto g = build_k2n(3);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edges().size(), 6u);
  const auto d = shortest_path_metric(g);
  EXPECT_EQ(d(0, 1), 2);
  EXPECT_EQ(d(2, 3), 2);
  EXPECT_EQ(d(3, 4), 2);
  EXPECT_EQ(d(0, 4), 1);
  EXPECT_EQ(d(1, 2), 1);
}

TEST(ShortestPath, SmallCases) {
  const auto d = unit_k2n(1);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d(0, 1), 2);
  WeightedGraph g(2);
  g.add_edge(0, 1, rat(5));
  EXPECT_EQ(shortest_path_metric(g)(0, 1), 5);
  EXPECT_THROW(build_k2n(0), InputError);
}

TEST(ShortestPath, DisconnectedAndZeroWeight) {
  WeightedGraph g(3);
  g.add_edge(0, 1, rat(1));
  EXPECT_THROW(shortest_path_metric(g), InputError);
  WeightedGraph z(2);
  z.add_edge(0, 1, rat(0));
  EXPECT_THROW(shortest_path_metric(z), InputError);
}

TEST(ShortestPath, WeightedPrefersShorterRoute) {
  WeightedGraph g(4);
  g.add_edge(0, 1, rat(5));
  g.add_edge(0, 2, rat(1, 2));
  g.add_edge(2, 3, rat(1, 3));
  g.add_edge(3, 1, rat(1, 6));
  const auto d = shortest_path_metric(g);
  EXPECT_EQ(d(0, 1), 1);
  EXPECT_EQ(d(2, 1), rat(1, 2));
}

TEST(Theta, K24Ell3Labels) {
  const auto theta = build_theta(2, 3);
  EXPECT_EQ(theta.graph.vertex_count(), 22u);
  const std::vector<Vertex> path2{0, 7, 8, 9, 10, 11, 1};
  EXPECT_EQ(theta.layout.path_vertices(2), path2);
  EXPECT_EQ(theta.layout.vertex_at(1, 3), 4u);
  EXPECT_EQ(theta.layout.vertex_at(4, 5), 21u);
  const auto pos = theta.layout.locate(9);
  EXPECT_FALSE(pos.terminal);
  EXPECT_EQ(pos.path, 2u);
  EXPECT_EQ(pos.offset, 3u);
}

TEST(Theta, K24Ell3Distances) {
  const auto d = shortest_path_metric(build_theta(2, 3).graph);
  EXPECT_EQ(d(0, 1), 6);
  // 2 is offset 1 on path 1 and 7 offset 1 on path 2, so the route goes
  // through terminal 0.
  EXPECT_EQ(d(2, 7), 2);
  EXPECT_EQ(d(4, 1), 3);
}

TEST(Theta, SmallestCases) {
  const auto cycle = shortest_path_metric(build_theta(1, 1).graph);
  const auto expected_cycle = FiniteMetric::from_rows({{0, 2, 1, 1}, {2, 0, 1, 1}, {1, 1, 0, 2}, {1, 1, 2, 0}});
  EXPECT_EQ(cycle, expected_cycle);
  EXPECT_EQ(shortest_path_metric(build_theta(3, 1).graph), unit_k2n(6));
  EXPECT_THROW(build_theta(0, 1), InputError);
  EXPECT_THROW(build_theta(1, 0), InputError);
}

TEST(Theta, TerminalDistancesExhaustive) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      const auto theta = build_theta(k, ell);
      const auto from0 = shortest_distances_from(theta.graph, 0);
      const auto from1 = shortest_distances_from(theta.graph, 1);
      const auto L = static_cast<std::int64_t>(2 * ell);
      for (Vertex v = 2; v < theta.graph.vertex_count(); ++v) {
        const auto j = static_cast<std::int64_t>(theta.layout.locate(v).offset);
        EXPECT_EQ(*from0[v], std::min(j, 2 * L - j));
        EXPECT_EQ(*from1[v], std::min(L - j, L + j));
        EXPECT_EQ(theta.graph.degree(v), 2u);
      }
      EXPECT_EQ(theta.graph.degree(0), 2 * k);
    }
  }
}

TEST(Restrict, Examples) {
  const std::vector<Vertex> first5{0, 1, 2, 3, 4};
  EXPECT_EQ(restrict_metric(unit_k2n(4), first5), unit_k2n(3));
  const auto m = unit_k2n(3);
  EXPECT_EQ(restrict_metric(m, first5), m);
  const std::vector<Vertex> three{0, 1, 2};
  const auto r = restrict_metric(shortest_path_metric(build_theta(2, 1).graph), three);
  EXPECT_EQ(r(0, 1), 2);
  EXPECT_EQ(r(0, 2), 1);
  EXPECT_EQ(r(1, 2), 1);
  const std::vector<Vertex> bad{0, 0};
  EXPECT_THROW(restrict_metric(m, bad), InputError);
  const std::vector<Vertex> out{0, 9};
  EXPECT_THROW(restrict_metric(m, out), InputError);
}

TEST(Restrict, DroppingABVertexCommutesWithShortestPaths) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<Vertex> keep(n + 1);
    for (Vertex v = 0; v <= n; ++v) keep[v] = v;
    EXPECT_EQ(restrict_metric(unit_k2n(n), keep), unit_k2n(n - 1));
  }
}

TEST(FiniteMetric, ScaledMultipliesEveryEntry) {
  const auto m = unit_k2n(3).scaled(rat(3, 2));
  EXPECT_EQ(m(0, 1), 3);
  EXPECT_EQ(m(0, 2), rat(3, 2));
  EXPECT_THROW(m.scaled(Rat(0)), InputError);
}

}  // namespace
}  // namespace l1cut
