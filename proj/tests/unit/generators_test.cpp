//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/generators.hpp"

#include <gtest/gtest.h>

#include "subcount/error.hpp"
#include "subcount/oracle.hpp"

namespace subcount {
namespace {

std::vector<NodeId> common_neighbors(const Graph& g, NodeId a, NodeId b) {
  std::vector<NodeId> out;
  for (NodeId v : g.neighbors(a))
    if (g.has_edge(v, b)) out.push_back(v);
  return out;
}

void expect_srg_16_6_2_2(const Graph& g) {
  ASSERT_EQ(g.num_nodes(), 16u);
  EXPECT_EQ(g.num_edges(), 48u);
  for (NodeId a = 0; a < 16; ++a) {
    EXPECT_EQ(g.degree(a), 6u);
    for (NodeId b = a + 1; b < 16; ++b) EXPECT_EQ(common_neighbors(g, a, b).size(), 2u) << a << "," << b;
  }
}

TEST(Cycle, Shapes) {
  EXPECT_EQ(gen_cycle(3), gen_complete(3));
  const Graph c6 = gen_cycle(6);
  for (NodeId v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2u);
  EXPECT_EQ(oracle_cycles(gen_cycle(8), 8).graph, 1);
  EXPECT_THROW(gen_cycle(2), PreconditionError);
}

TEST(CyclePair, TwoTrianglesAndHexagon) {
  const auto [two, one] = gen_cycle_pair(3);
  EXPECT_EQ(two.num_nodes(), 6u);
  EXPECT_EQ(one.num_nodes(), 6u);
  EXPECT_EQ(oracle_cycles(two, 3).graph, 2);
  EXPECT_EQ(oracle_cycles(one, 3).graph, 0);
  EXPECT_EQ(oracle_cycles(one, 6).graph, 1);
  EXPECT_THROW(gen_cycle_pair(2), PreconditionError);
}

TEST(CyclePair, PathCountsDiffer) {
  const auto [two, one] = gen_cycle_pair(5);
  EXPECT_NE(oracle_paths(two, 5).graph, oracle_paths(one, 5).graph);
}

TEST(ConedCycles, Structure) {
  for (std::size_t L = 3; L <= 5; ++L) {
    const auto [joined, split] = gen_coned_cycles(L);
    EXPECT_EQ(joined.num_nodes(), 2 * L + 1);
    EXPECT_EQ(split.num_nodes(), 2 * L + 1);
    EXPECT_EQ(joined.degree(0), 2 * L);
    EXPECT_EQ(split.degree(0), 2 * L);
    EXPECT_EQ(joined.num_edges(), 4 * L);
    EXPECT_EQ(split.num_edges(), 4 * L);
  }
  EXPECT_THROW(gen_coned_cycles(2), PreconditionError);
}

TEST(ConedCycles, ApexCountsForThree) {
  const auto [joined, split] = gen_coned_cycles(3);
  EXPECT_EQ(oracle_cycles(joined, 5).node[0], 6);
  EXPECT_EQ(oracle_cycles(split, 5).node[0], 0);
  // 4-paths with the apex as an endpoint: 6 rim starting points, each with
  // two directions around the hexagon.
  EXPECT_EQ(oracle_paths(joined, 4).endpoint[0], 12);
}

TEST(ConedCycles, LongerCyclesForFour) {
  const auto [joined, split] = gen_coned_cycles(4);
  EXPECT_GT(oracle_cycles(joined, 6).node[0], 0);
  EXPECT_EQ(oracle_cycles(split, 6).node[0], 0);
}

TEST(StronglyRegular, RookAndShrikhande) {
  expect_srg_16_6_2_2(gen_rook4x4());
  expect_srg_16_6_2_2(gen_shrikhande());
}

TEST(StronglyRegular, CommonNeighborsOfAnEdge) {
  // Rook's graph: the two common neighbors of an edge lie on the same line
  // and are adjacent. Shrikhande: every neighborhood is a hexagon, so they
  // never are.
  auto adjacent_commons = [](const Graph& g) {
    std::size_t edges_with_adjacent = 0;
    for (const Edge& e : g.edges()) {
      const auto c = common_neighbors(g, e.u, e.v);
      if (c.size() == 2 && g.has_edge(c[0], c[1])) ++edges_with_adjacent;
    }
    return edges_with_adjacent;
  };
  EXPECT_EQ(adjacent_commons(gen_rook4x4()), 48u);
  EXPECT_EQ(adjacent_commons(gen_shrikhande()), 0u);
}

TEST(StronglyRegular, EightCycleCountsDiffer) {
  const auto rook = oracle_cycles(gen_rook4x4(), 8);
  const auto shrik = oracle_cycles(gen_shrikhande(), 8);
  EXPECT_NE(rook.graph, shrik.graph);
  // Both are vertex-transitive.
  for (NodeId v = 1; v < 16; ++v) {
    EXPECT_EQ(rook.node[v], rook.node[0]);
    EXPECT_EQ(shrik.node[v], shrik.node[0]);
  }
}

TEST(Random, EdgeCases) {
  EXPECT_EQ(gen_random(0, 0.5, 3).num_nodes(), 0u);
  EXPECT_EQ(gen_random(20, 1.0, 3), gen_complete(20));
  EXPECT_EQ(gen_random(20, 0.0, 3).num_edges(), 0u);
  EXPECT_EQ(gen_random(15, 0.3, 42), gen_random(15, 0.3, 42));
  EXPECT_NE(gen_random(15, 0.3, 42), gen_random(15, 0.3, 43));
  EXPECT_THROW(gen_random(5, 1.5, 0), PreconditionError);
}

TEST(RandomRegular, DegreesAndDeterminism) {
  const Graph g = gen_random_regular(200, 4, 9);
  for (NodeId v = 0; v < 200; ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(g, gen_random_regular(200, 4, 9));
  EXPECT_EQ(gen_random_regular(0, 4, 1).num_nodes(), 0u);
  EXPECT_THROW(gen_random_regular(5, 3, 1), PreconditionError);
}

TEST(SmallGraphs, Shapes) {
  EXPECT_EQ(gen_path(5).num_edges(), 4u);
  EXPECT_EQ(gen_star(4).num_nodes(), 5u);
  EXPECT_EQ(gen_complete(5).num_edges(), 10u);
  const Graph p = gen_petersen();
  EXPECT_EQ(p.num_edges(), 15u);
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  EXPECT_EQ(oracle_cycles(p, 3).graph, 0);
  EXPECT_EQ(oracle_cycles(p, 4).graph, 0);
  EXPECT_EQ(gen_paw().num_edges(), 4u);
  EXPECT_EQ(gen_diamond().num_edges(), 5u);
  EXPECT_FALSE(gen_diamond().has_edge(2, 3));
  EXPECT_TRUE(gen_diamond().has_edge(0, 1));
}

}  // namespace
}  // namespace subcount
