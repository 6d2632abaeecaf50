//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "subcount/error.hpp"
#include "subcount/generators.hpp"
#include "test_support.hpp"

namespace subcount {
namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

TEST(Graph, TriangleDegrees) {
  const Graph g = make(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Graph, RejectsSelfLoopDuplicateAndRange) {
  EXPECT_THROW(make(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(make(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(make(2, {{0, 2}}), ValidationError);
}

TEST(Graph, DegreeOutOfRangeThrows) {
  const Graph g = make(2, {{0, 1}});
  EXPECT_THROW(g.degree(2), std::out_of_range);
  EXPECT_THROW(g.neighbors(5), std::out_of_range);
}

TEST(Graph, StarCenterDegree) { EXPECT_EQ(gen_star(4).degree(0), 4u); }

TEST(Graph, NeighborsSortedAndSymmetric) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen_random(15, 0.3, rng());
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      const auto nb = g.neighbors(u);
      degree_sum += nb.size();
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (NodeId v : nb) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(v, u));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(Graph, EdgesAreCanonical) {
  const Graph g = make(4, {{3, 1}, {2, 0}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(Graph, EdgeAndNodeLabels) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const std::vector<std::int64_t> el{5, 7};
  const Graph g = Graph::from_edges(3, edges, el, {{1}, {2}, {3}});
  EXPECT_EQ(g.edge_label(1, 0), 5);
  EXPECT_EQ(g.edge_label(2, 1), 7);
  EXPECT_EQ(g.node_label(2)[0], 3);
  EXPECT_THROW(Graph::from_edges(3, edges, std::vector<std::int64_t>{1}), ValidationError);
}

TEST(Graph, PermutedPreservesStructure) {
  std::mt19937_64 rng(3);
  const Graph g = gen_random(12, 0.4, 11);
  const auto perm = testing::random_permutation(g.num_nodes(), rng);
  const Graph h = g.permuted(perm);
  EXPECT_EQ(h.num_edges(), g.num_edges());
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.has_edge(perm[e.u], perm[e.v]));
  EXPECT_THROW(g.permuted(std::vector<NodeId>(12, 0)), ValidationError);
}

TEST(Graph, DisjointUnionShiftsSecondGraph) {
  const Graph u = gen_cycle(3).disjoint_union(gen_path(2));
  EXPECT_EQ(u.num_nodes(), 5u);
  EXPECT_EQ(u.num_edges(), 4u);
  EXPECT_TRUE(u.has_edge(3, 4));
  EXPECT_FALSE(u.has_edge(2, 3));
}

TEST(ShortestPaths, PathGraph) {
  const auto d = shortest_path_distances(gen_path(4), 0);
  ASSERT_EQ(d.size(), 4u);
  for (std::uint32_t k = 0; k < 4; ++k) EXPECT_EQ(d[k], k);
}

TEST(ShortestPaths, UnreachableIsSentinel) {
  const Graph g = make(4, {{0, 1}, {2, 3}});
  const auto d = shortest_path_distances(g, 0);
  EXPECT_EQ(d[0], 0u);
  EXPECT_EQ(d[1], 1u);
  EXPECT_FALSE(d[2].has_value());
  EXPECT_FALSE(d[3].has_value());
}

TEST(ShortestPaths, SixCycle) {
  const auto d = shortest_path_distances(gen_cycle(6), 0);
  const std::vector<std::uint32_t> expected{0, 1, 2, 3, 2, 1};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(d[k], expected[k]);
}

TEST(ShortestPaths, TriangleInequalityOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = gen_random(12, 0.25, seed);
    std::vector<std::vector<Distance>> all;
    for (NodeId s = 0; s < g.num_nodes(); ++s) all.push_back(shortest_path_distances(g, s));
    for (NodeId a = 0; a < g.num_nodes(); ++a)
      for (NodeId b = 0; b < g.num_nodes(); ++b)
        for (NodeId c = 0; c < g.num_nodes(); ++c) {
          if (all[a][b] && all[b][c]) {
            ASSERT_TRUE(all[a][c]);
            EXPECT_LE(*all[a][c], *all[a][b] + *all[b][c]);
          }
        }
    // Symmetry too.
    for (NodeId a = 0; a < g.num_nodes(); ++a)
      for (NodeId b = 0; b < g.num_nodes(); ++b) EXPECT_EQ(all[a][b], all[b][a]);
  }
}

}  // namespace
}  // namespace subcount
