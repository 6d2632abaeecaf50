//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/extraction.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "subcount/engine.hpp"
#include "subcount/error.hpp"
#include "subcount/generators.hpp"

namespace subcount {
namespace {

std::vector<std::int64_t> first_labels(const RootedSubgraph& sub) {
  std::vector<std::int64_t> out;
  for (LocalIndex k = 0; k < sub.size(); ++k) out.push_back(sub.labels(k)[0]);
  return out;
}

TEST(ExtractRooted, TriangleEgoOne) {
  const auto sub = extract_rooted(gen_complete(3), 0, ExtractionPolicy::ego(1), Labeling::identity);
  EXPECT_EQ(sub.graph->nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(sub.graph->num_edges(), 3u);
  EXPECT_EQ(first_labels(sub), (std::vector<std::int64_t>{1, 0, 0}));
}

TEST(ExtractRooted, PathEgoTwoSpd) {
  const auto sub = extract_rooted(gen_path(4), 0, ExtractionPolicy::ego(2), Labeling::spd);
  EXPECT_EQ(sub.graph->nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(first_labels(sub), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_TRUE(sub.provides(LabelKind::spd_root));
  EXPECT_FALSE(sub.provides(LabelKind::is_root));
}

TEST(ExtractRooted, StarNodeDeletion) {
  const auto sub = extract_rooted(gen_star(4), 0, ExtractionPolicy::node_deletion(), Labeling::identity);
  EXPECT_EQ(sub.size(), 4u);
  EXPECT_EQ(sub.graph->num_edges(), 0u);
  EXPECT_EQ(sub.root, 0u);
  EXPECT_FALSE(sub.root_local().has_value());
  // The root's neighbors are still known.
  for (LocalIndex k = 0; k < 4; ++k) EXPECT_EQ(sub.label(k, LabelKind::root_nbr), 1);
}

TEST(ExtractRooted, Errors) {
  EXPECT_THROW(extract_rooted(gen_path(3), 3, ExtractionPolicy::ego(1), Labeling::identity), std::out_of_range);
  EXPECT_THROW(extract_rooted(gen_path(3), 0, ExtractionPolicy::ego(0), Labeling::identity), PreconditionError);
  EXPECT_THROW(extract_pair(gen_path(3), 0, 2, ExtractionPolicy::ego(1), Labeling::identity), PreconditionError);
}

TEST(ExtractRooted, EgoIsExactlyTheBall) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random(16, 0.2, seed);
    for (unsigned k = 1; k <= 3; ++k) {
      for (NodeId root = 0; root < g.num_nodes(); ++root) {
        const auto sub = extract_rooted(g, root, ExtractionPolicy::ego(k), Labeling::spd);
        const auto d = shortest_path_distances(g, root);
        std::vector<NodeId> ball;
        for (NodeId v = 0; v < g.num_nodes(); ++v)
          if (d[v] && *d[v] <= k) ball.push_back(v);
        ASSERT_EQ(sub.graph->nodes, ball);
        for (LocalIndex l = 0; l < sub.size(); ++l) EXPECT_EQ(sub.label(l, LabelKind::spd_root), *d[sub.graph->nodes[l]]);
        // Induced: every parent edge inside the ball is kept.
        std::size_t inside = 0;
        for (const Edge& e : g.edges()) {
          if (std::binary_search(ball.begin(), ball.end(), e.u) && std::binary_search(ball.begin(), ball.end(), e.v))
            ++inside;
        }
        EXPECT_EQ(sub.graph->num_edges(), inside);
      }
    }
  }
}

TEST(Bags, Sizes) {
  const Graph k3 = gen_complete(3);
  const auto bag = extract_bag_subgraph_mpnn(k3, ExtractionPolicy::ego(1), Labeling::identity);
  ASSERT_EQ(bag.items.size(), 3u);
  for (NodeId i = 0; i < 3; ++i) {
    EXPECT_EQ(bag.items[i].root, i);
    EXPECT_EQ(bag.items[i].label(i, LabelKind::is_root), 1);
  }
  EXPECT_EQ(extract_bag_i2(k3, 1, Labeling::identity).items.size(), 6u);
  const Graph empty = Graph::from_edges(0, {});
  EXPECT_TRUE(extract_bag_subgraph_mpnn(empty, ExtractionPolicy::ego(1), Labeling::identity).items.empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_random(14, 0.3, seed);
    EXPECT_EQ(extract_bag_i2(g, 2, Labeling::identity).items.size(), 2 * g.num_edges());
    EXPECT_EQ(extract_bag_subgraph_mpnn(g, ExtractionPolicy::ego(2), Labeling::spd).items.size(), g.num_nodes());
  }
}

TEST(Bags, SixCycleEgoTwoIsCenteredPath) {
  const auto bag = extract_bag_subgraph_mpnn(gen_cycle(6), ExtractionPolicy::ego(2), Labeling::spd);
  for (const auto& sub : bag.items) {
    EXPECT_EQ(sub.size(), 5u);
    EXPECT_EQ(sub.graph->num_edges(), 4u);
    auto spd = first_labels(sub);
    std::sort(spd.begin(), spd.end());
    EXPECT_EQ(spd, (std::vector<std::int64_t>{0, 1, 1, 2, 2}));
  }
}

TEST(Bags, PairsOrderedAndMarked) {
  const Graph c6 = gen_cycle(6);
  const auto bag = extract_bag_i2(c6, 3, Labeling::identity);
  ASSERT_EQ(bag.items.size(), 12u);
  for (std::size_t t = 0; t < bag.items.size(); ++t) {
    const auto& sub = bag.items[t];
    ASSERT_TRUE(sub.branching);
    EXPECT_TRUE(c6.has_edge(sub.root, *sub.branching));
    EXPECT_EQ(sub.size(), 6u);
    int roots = 0, branches = 0;
    for (LocalIndex k = 0; k < sub.size(); ++k) {
      const auto z = sub.labels(k);
      ASSERT_EQ(z.size(), 2u);
      roots += static_cast<int>(z[0]);
      branches += static_cast<int>(z[1]);
    }
    EXPECT_EQ(roots, 1);
    EXPECT_EQ(branches, 1);
    if (t > 0) {
      const auto& prev = bag.items[t - 1];
      EXPECT_LT(std::make_pair(prev.root, *prev.branching), std::make_pair(sub.root, *sub.branching));
    }
  }
}

TEST(Bags, ParallelExtractionMatchesSerial) {
  const Graph g = gen_random(30, 0.2, 4);
  const auto a = extract_bag_i2(g, 2, Labeling::spd, 1);
  const auto b = extract_bag_i2(g, 2, Labeling::spd, 4);
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t t = 0; t < a.items.size(); ++t) {
    EXPECT_EQ(a.items[t].graph->nodes, b.items[t].graph->nodes);
    EXPECT_EQ(a.items[t].table, b.items[t].table);
  }
}

TEST(Policies, Parse) {
  EXPECT_EQ(parse_policy("ego:3"), ExtractionPolicy::ego(3));
  EXPECT_EQ(parse_policy("ego", 2), ExtractionPolicy::ego(2));
  EXPECT_EQ(parse_policy("node_deletion"), ExtractionPolicy::node_deletion());
  EXPECT_EQ(to_string(ExtractionPolicy::ego(4)), "ego:4");
  EXPECT_THROW(parse_policy("edge_deletion"), ParseError);
  EXPECT_THROW(parse_labeling("random"), ParseError);
}

// Message-passing programs over the identity-labeled full graph recover each
// policy's node mask and the distance labeling.

MPProgram ego_mask_program(unsigned hops) {
  MPProgram p{"ego_mask", BagMode::subgraph, {{{}, {Expr::label(LabelKind::is_root)}}}};
  for (unsigned t = 0; t < hops; ++t) p.layers.push_back({{Expr::nbr(0)}, {gt0(Expr::self(0) + Expr::agg(0))}});
  return p;
}

MPProgram spd_program(unsigned rounds) {
  // State is spd + 1, with 0 for "not reached yet".
  MPProgram p{"spd", BagMode::subgraph, {{{}, {Expr::label(LabelKind::is_root)}}}};
  for (unsigned t = 0; t < rounds; ++t) {
    const Expr h = Expr::self(0);
    p.layers.push_back({{Expr::nbr(0)},
                        {Expr(static_cast<Count>(t) + 2) * eq0(h) * gt0(Expr::agg(0)) + h * ne0(h)}});
  }
  return p;
}

TEST(IdentityLabeling, RecoversEgoMasksAndDistances) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = gen_random(4 + seed % 13, 0.25, 100 + seed);
    const std::size_t n = g.num_nodes();
    for (NodeId root = 0; root < n; ++root) {
      const auto full = extract_rooted(g, root, ExtractionPolicy::full(), Labeling::identity);
      for (unsigned k = 1; k <= 3; ++k) {
        const auto st = run_program(full, ego_mask_program(k));
        const auto ego = extract_rooted(g, root, ExtractionPolicy::ego(k), Labeling::identity);
        std::vector<NodeId> masked;
        for (LocalIndex l = 0; l < n; ++l)
          if (st.row(l)[0] == 1) masked.push_back(full.graph->nodes[l]);
        ASSERT_EQ(masked, ego.graph->nodes);
      }
      // Node deletion: the mask is "not the root".
      const auto del = extract_rooted(g, root, ExtractionPolicy::node_deletion(), Labeling::identity);
      std::vector<NodeId> kept;
      for (LocalIndex l = 0; l < n; ++l)
        if (full.label(l, LabelKind::is_root) == 0) kept.push_back(full.graph->nodes[l]);
      ASSERT_EQ(kept, del.graph->nodes);

      const auto st = run_program(full, spd_program(static_cast<unsigned>(n)));
      const auto spd = extract_rooted(g, root, ExtractionPolicy::full(), Labeling::spd);
      for (LocalIndex l = 0; l < n; ++l) ASSERT_EQ(st.row(l)[0] - 1, spd.label(l, LabelKind::spd_root));
    }
  }
}

}  // namespace
}  // namespace subcount
