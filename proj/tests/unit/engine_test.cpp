//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/engine.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "subcount/counting.hpp"
#include "subcount/error.hpp"
#include "subcount/generators.hpp"
#include "subcount/oracle.hpp"
#include "test_support.hpp"

namespace subcount {
namespace {

using testing::random_corpus;

// Rooted 2-path count: k != i collects its neighbors inside N(i).
MPProgram path2_rooted() {
  return {"path2_rooted",
          BagMode::subgraph,
          {{{}, {Expr::label(LabelKind::root_nbr)}},
           {{Expr::nbr(0)}, {(1 - Expr::label(LabelKind::is_root)) * Expr::agg(0)}}}};
}

Count rooted_sum(const Graph& g, NodeId root, const MPProgram& prog, unsigned hops, std::size_t column = 0) {
  const auto st = run_program(extract_rooted(g, root, ExtractionPolicy::ego(hops), Labeling::identity), prog);
  Count total = 0;
  for (LocalIndex k = 0; k < st.size(); ++k) total += st.row(k)[column];
  return total;
}

TEST(RunProgram, TwoPathsOnStarCenter) { EXPECT_EQ(rooted_sum(gen_star(4), 0, path2_rooted(), 2), 0); }

TEST(RunProgram, TwoPathsOnPathEnd) { EXPECT_EQ(rooted_sum(gen_path(3), 0, path2_rooted(), 2), 1); }

TEST(RunProgram, ThreePathsOnFiveCycle) {
  const Graph c5 = gen_cycle(5);
  const auto prog = counting_program(Substructure::path3).program;
  const auto sub = extract_rooted(c5, 0, ExtractionPolicy::ego(3), Labeling::identity);
  const auto st = run_program(sub, prog);
  ASSERT_EQ(st.width, 3u);
  const auto oracle = oracle_path_matrix(c5, 3);
  for (LocalIndex k = 0; k < st.size(); ++k) EXPECT_EQ(st.row(k)[2], oracle[sub.graph->nodes[k]]);
  EXPECT_EQ(st.row(*sub.graph->local_index(2))[2], 1);
  EXPECT_EQ(st.row(*sub.graph->local_index(3))[2], 1);
}

TEST(RunProgram, ZeroWidthWithoutLayers) {
  const auto st = run_program(extract_rooted(gen_path(3), 0, ExtractionPolicy::ego(1), Labeling::identity),
                              MPProgram{"empty", BagMode::subgraph, {}});
  EXPECT_EQ(st.width, 0u);
  EXPECT_EQ(st.size(), 0u);
}

TEST(RunProgram, Errors) {
  const Graph g = gen_path(3);
  const auto sub = extract_rooted(g, 0, ExtractionPolicy::ego(1), Labeling::identity);
  // Reads a component that does not exist yet.
  EXPECT_THROW(run_program(sub, MPProgram{"bad", BagMode::subgraph, {{{}, {Expr::self(0)}}}}), ProgramError);
  EXPECT_THROW(run_program(sub, MPProgram{"bad", BagMode::subgraph, {{{}, {Expr::agg(0)}}}}), ProgramError);
  // Needs a branching node the subgraph does not have.
  try {
    run_program(sub, MPProgram{"bad", BagMode::subgraph, {{{}, {Expr::label(LabelKind::is_branch)}}}});
    FAIL();
  } catch (const ProgramError& e) {
    EXPECT_NE(std::string(e.what()).find("missing label"), std::string::npos);
  }
  // The spd labeling carries no identity indicators.
  const auto spd = extract_rooted(g, 0, ExtractionPolicy::ego(1), Labeling::spd);
  EXPECT_THROW(run_program(spd, path2_rooted()), ProgramError);
  EXPECT_THROW(run_program(sub, MPProgram{"attr", BagMode::subgraph, {{{}, {Expr::attr(0)}}}}), ProgramError);
}

TEST(RunProgram, OverflowIsDetected) {
  MPProgram p{"square", BagMode::subgraph, {{{}, {Expr(3)}}}};
  for (int t = 0; t < 8; ++t) p.layers.push_back({{}, {Expr::self(0) * Expr::self(0)}});
  const auto sub = extract_rooted(gen_path(2), 0, ExtractionPolicy::ego(1), Labeling::identity);
  EXPECT_THROW(run_program(sub, p), OverflowError);
}

TEST(RunProgram, ReadsAttributesAndEdgeLabels) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  const std::vector<std::int64_t> edge_labels = {5, 7};
  const Graph g = Graph::from_edges(3, edges, edge_labels, {{10}, {20}, {30}});
  const auto sub = extract_rooted(g, 1, ExtractionPolicy::ego(1), Labeling::identity);
  const MPProgram p{"attr", BagMode::subgraph, {{{Expr::nbr_attr(0) * Expr::edge()}, {Expr::attr(0) + Expr::agg(0)}}}};
  const auto st = run_program(sub, p, &g);
  EXPECT_EQ(st.row(0)[0], 10 + 20 * 5);
  EXPECT_EQ(st.row(1)[0], 20 + 10 * 5 + 30 * 7);
  EXPECT_EQ(st.row(2)[0], 30 + 20 * 7);
}

TEST(Validate, WidthsAndModes) {
  const auto cp = counting_program(Substructure::cycle4);
  EXPECT_NO_THROW(validate(cp.program, cp.plan));
  ReadoutPlan wide = cp.plan;
  wide.node.terms.push_back(Expr::self(9));
  EXPECT_THROW(validate(cp.program, wide), ProgramError);
  ReadoutPlan with_edge = cp.plan;
  with_edge.edge = with_edge.node;
  EXPECT_THROW(validate(cp.program, with_edge), ProgramError);
  const auto pair = counting_program(Substructure::cycle5);
  ReadoutPlan no_edge = pair.plan;
  no_edge.edge.reset();
  EXPECT_THROW(validate(pair.program, no_edge), ProgramError);

  const Graph g = gen_cycle(5);
  EXPECT_THROW(run_bag(extract_bag_subgraph_mpnn(g, ExtractionPolicy::ego(2), Labeling::identity), pair.program,
                       pair.plan),
               ProgramError);
  EXPECT_THROW(run_bag(extract_bag_i2(g, 2, Labeling::identity), cp.program, cp.plan), ProgramError);
}

TEST(RunBag, ConstantZero) {
  const MPProgram zero{"zero", BagMode::subgraph, {{{Expr(0)}, {Expr(0), Expr::agg(0)}}}};
  ReadoutPlan plan;
  plan.node.terms = {Expr::self(0), Expr::self(1)};
  plan.node.outputs = {{Expr::agg(0)}, {Expr::agg(1)}};
  plan.graph = Aggregation{{Expr::self(0)}, {{Expr::agg(0)}}};
  for (const Graph& g : {gen_petersen(), gen_random(20, 0.3, 2), gen_path(1)}) {
    const auto r = run_bag(extract_bag_subgraph_mpnn(g, ExtractionPolicy::ego(2), Labeling::identity), zero, plan);
    ASSERT_EQ(r.node.size(), g.num_nodes());
    for (const auto& v : r.node) EXPECT_EQ(v, (std::vector<Count>{0, 0}));
    EXPECT_EQ(r.graph, (std::vector<Count>{0}));
  }
}

TEST(RunBag, TriangleProgramOnK3) {
  const auto cp = counting_program(Substructure::cycle3);
  const auto r = run_bag(extract_bag_subgraph_mpnn(gen_complete(3), ExtractionPolicy::ego(1), Labeling::identity),
                         cp.program, cp.plan);
  for (const auto& v : r.node) EXPECT_EQ(v[0], 1);
  EXPECT_EQ((*r.graph)[0], 1);
}

TEST(RunBag, PlainModeIsPerNode) {
  const auto cp = counting_program(Substructure::path2);
  const auto r = run_bag(extract_bag_plain(gen_star(4)), cp.program, cp.plan);
  EXPECT_EQ(r.node[0][0], 0);
  for (NodeId v = 1; v <= 4; ++v) EXPECT_EQ(r.node[v][0], 3);
  EXPECT_EQ((*r.graph)[0], 6);
}

TEST(RunBag, PairModeEdgeResults) {
  const auto cp = counting_program(Substructure::path4);
  const Graph g = gen_random(12, 0.35, 9);
  const auto r = run_bag(extract_bag_i2(g, 4, Labeling::identity), cp.program, cp.plan);
  ASSERT_EQ(r.edge.size(), 2 * g.num_edges());
  const auto oracle = oracle_path4_table(g);
  std::map<std::pair<NodeId, NodeId>, Count> per_pair;
  for (const auto& e : oracle) per_pair[{e.root, e.branching}] += e.paths;
  for (const auto& e : r.edge) EXPECT_EQ(e.values[0], (per_pair[{e.root, e.branching}]));
}

BagResult run_kind(const Graph& g, Substructure kind, unsigned threads = 1) {
  const auto cp = counting_program(kind);
  const auto info = kind_info(kind);
  SubgraphBag bag;
  switch (info.mode) {
    case BagMode::plain: bag = extract_bag_plain(g); break;
    case BagMode::subgraph:
      bag = extract_bag_subgraph_mpnn(g, ExtractionPolicy::ego(info.default_hops), Labeling::identity, threads);
      break;
    case BagMode::pair: bag = extract_bag_i2(g, info.default_hops, Labeling::identity, threads); break;
  }
  RunOptions opt;
  opt.threads = threads;
  return run_bag(bag, cp.program, cp.plan, opt);
}

TEST(RunBag, DisjointUnionIsConcatenation) {
  const Graph a = gen_random(10, 0.4, 3);
  const Graph b = gen_petersen();
  const Graph u = a.disjoint_union(b);
  for (Substructure kind : {Substructure::path3, Substructure::cycle5, Substructure::cycle6, Substructure::clique4}) {
    const auto ra = run_kind(a, kind);
    const auto rb = run_kind(b, kind);
    const auto ru = run_kind(u, kind);
    auto expected = ra.node;
    expected.insert(expected.end(), rb.node.begin(), rb.node.end());
    EXPECT_EQ(ru.node, expected) << to_string(kind);
    EXPECT_EQ((*ru.graph)[0], (*ra.graph)[0] + (*rb.graph)[0]);
  }
}

TEST(RunBag, PermutationEquivariance) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (const auto& ng : random_corpus(4)) {
    const auto perm = testing::random_permutation(ng.graph.num_nodes(), rng);
    const Graph pg = ng.graph.permuted(perm);
    for (Substructure kind : {Substructure::path4, Substructure::cycle4, Substructure::cycle6,
                              Substructure::tailed_triangle}) {
      const auto r = run_kind(ng.graph, kind);
      const auto rp = run_kind(pg, kind);
      for (NodeId v = 0; v < ng.graph.num_nodes(); ++v) ASSERT_EQ(rp.node[perm[v]], r.node[v]);
      ASSERT_EQ(rp.graph, r.graph);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(RunBag, ThreadCountDoesNotChangeResults) {
  const Graph g = gen_random(40, 0.15, 5);
  for (Substructure kind : {Substructure::cycle6, Substructure::triangle_rectangle}) {
    const auto one = run_kind(g, kind, 1);
    const auto four = run_kind(g, kind, 4);
    EXPECT_EQ(one.node, four.node);
    EXPECT_EQ(one.graph, four.graph);
  }
}

TEST(ProgramText, RoundTripsEveryCountingProgram) {
  for (Substructure kind : counted_substructures()) {
    const auto cp = counting_program(kind);
    const auto text = cp.program.to_text();
    EXPECT_EQ(MPProgram::parse(text), cp.program) << text;
    EXPECT_EQ(MPProgram::parse(text).to_text(), text);
    EXPECT_EQ(ReadoutPlan::parse(cp.plan.to_text()), cp.plan) << cp.plan.to_text();
  }
  const auto walk = counting_program(Substructure::walk, 3);
  EXPECT_EQ(MPProgram::parse(walk.program.to_text()), walk.program);
}

TEST(ProgramText, ParseErrors) {
  EXPECT_THROW(MPProgram::parse(""), ParseError);
  EXPECT_THROW(MPProgram::parse("program x mode=tree\n"), ParseError);
  EXPECT_THROW(MPProgram::parse("program x mode=plain\nlayer messages: 1\n"), ParseError);
  EXPECT_THROW(ReadoutPlan::parse("graph terms: self[0] | outputs: agg[0] / 0\n"), ParseError);
}

}  // namespace
}  // namespace subcount
