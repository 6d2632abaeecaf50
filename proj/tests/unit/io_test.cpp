//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "subcount/error.hpp"
#include "subcount/generators.hpp"
#include "test_support.hpp"

namespace subcount {
namespace {

TEST(EdgeList, ParsesTriangle) {
  const Graph g = parse_edgelist("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g, gen_cycle(3));
}

TEST(EdgeList, CommentsAndBlankLines) {
  const Graph g = parse_edgelist("# a triangle\n3 3\n\n0 1 \n1 2\r\n# edge\n2 0");
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edgelist("2 1\n0 0\n"), ValidationError);
  EXPECT_THROW(parse_edgelist("2 1\n0 2\n"), ValidationError);
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n1 0\n"), ValidationError);
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edgelist(""), ParseError);
}

TEST(EdgeList, EmptyGraph) {
  const Graph g = parse_edgelist("0 0\n");
  EXPECT_EQ(g.num_nodes(), 0u);
}

TEST(EdgeList, RoundTripIsCanonical) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random(10, 0.35, seed);
    const std::string text = to_edgelist(g);
    EXPECT_EQ(parse_edgelist(text), g);
    EXPECT_EQ(to_edgelist(parse_edgelist(text)), text);
  }
  // A non-canonical file re-serializes to the canonical order.
  EXPECT_EQ(to_edgelist(parse_edgelist("3 2\n2 1\n1 0\n")), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, SaveAndLoadFile) {
  const auto path = std::filesystem::temp_directory_path() / "subcount_io_test.el";
  const Graph g = gen_petersen();
  save_edgelist(g, path);
  EXPECT_EQ(load_graph(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(load_graph(path), ParseError);
}

TEST(Graph6, TriangleMatchesEdgeList) {
  EXPECT_EQ(parse_graph6("Bw"), parse_edgelist("3 3\n0 1\n1 2\n2 0\n"));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), gen_cycle(3));
}

TEST(Graph6, AllGraphsUpToFiveNodesCrossCheck) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (NodeId v = 1; v < n; ++v)
      for (NodeId u = 0; u < v; ++u) pairs.push_back({u, v});
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1U) edges.push_back(pairs[k]);
      const Graph g = Graph::from_edges(n, edges);
      ASSERT_EQ(parse_graph6(testing::to_graph6(g)), g) << "n=" << n << " mask=" << mask;
      ASSERT_EQ(parse_edgelist(to_edgelist(g)), g);
    }
  }
}

TEST(Graph6, LargerGraphsAndMultiLine) {
  const Graph a = gen_rook4x4();
  const Graph b = gen_random(40, 0.2, 5);
  const auto gs = parse_graph6_lines(testing::to_graph6(a) + "\n" + testing::to_graph6(b) + "\n\n");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0], a);
  EXPECT_EQ(gs[1], b);
}

TEST(Graph6, SixtyThreeOrMoreNodes) {
  // n = 63 uses the 4-byte size form: 126 followed by three 6-bit words.
  std::string rec(1, static_cast<char>(126));
  rec += static_cast<char>(63 + 0);
  rec += static_cast<char>(63 + 0);
  rec += static_cast<char>(63 + 63);
  const std::size_t bytes = (63 * 62 / 2 + 5) / 6;
  rec += std::string(bytes, static_cast<char>(63));
  const Graph g = parse_graph6(rec);
  EXPECT_EQ(g.num_nodes(), 63u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);    // truncated
  EXPECT_THROW(parse_graph6("Bww"), ParseError);  // trailing data
  EXPECT_THROW(parse_graph6("B\x01"), ParseError);
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("graph6"), GraphFormat::graph6);
  EXPECT_EQ(parse_format("edgelist"), GraphFormat::edgelist);
  EXPECT_THROW(parse_format("gml"), ParseError);
}

}  // namespace
}  // namespace subcount
