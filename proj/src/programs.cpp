//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <charconv>

#include "subcount/counting.hpp"
#include "subcount/error.hpp"

namespace subcount {

namespace {

// Shorthands for the precomputed labels.
const Expr kRoot = Expr::label(LabelKind::is_root);
const Expr kBranch = Expr::label(LabelKind::is_branch);
const Expr kRootNbr = Expr::label(LabelKind::root_nbr);
const Expr kBranchNbr = Expr::label(LabelKind::branch_nbr);
const Expr kNbrRoot = Expr::nbr_label(LabelKind::is_root);
const Expr kNbrBranch = Expr::nbr_label(LabelKind::is_branch);
const Expr kNbrRootNbr = Expr::nbr_label(LabelKind::root_nbr);
const Expr kNbrBranchNbr = Expr::nbr_label(LabelKind::branch_nbr);

Expr s(std::size_t c) { return Expr::self(c); }
Expr n(std::size_t c) { return Expr::nbr(c); }
Expr a(std::size_t c) { return Expr::agg(c); }

// 1[k != i] and 1[k != i] 1[k != j].
Expr off_root() { return 1 - kRoot; }
Expr off_pair() { return (1 - kRoot) * (1 - kBranch); }
Expr nbr_off_pair() { return (1 - kNbrRoot) * (1 - kNbrBranch); }

Aggregation sum_of(std::vector<Expr> terms, Count divisor = 1) {
  Aggregation agg;
  for (std::size_t c = 0; c < terms.size(); ++c) agg.outputs.push_back({a(c), c == 0 ? divisor : 1});
  agg.terms = std::move(terms);
  return agg;
}

Aggregation graph_sum(Count divisor) { return sum_of({s(0)}, divisor); }

// Three layers counting simple 3-paths i -> a -> b -> k in a rooted subgraph.
// State after the last layer: [P1, P2, P3].
std::vector<Layer> path3_layers() {
  return {
      // P1(k) = 1[k ∈ N(i)]
      {{kNbrRoot}, {off_root() * a(0)}},
      // P2(k) = #{a ∈ N(i) ∩ N(k)}, k != i
      {{n(0)}, {s(0), off_root() * a(0)}},
      // P3(k): extend each 2-path i -> a -> l by l -> k, dropping a = k. The
      // root never carries 2-paths, so the correction is skipped for l = i.
      {{n(1) - (1 - kNbrRoot) * s(0)}, {s(0), s(1), off_root() * a(0)}},
  };
}

// Three layers counting simple 4-paths i -> j -> a -> b -> k in a pair
// subgraph. State after the last layer: [Q1, Q2, P4] with
// Q1(k) = 1[k ∈ N(j) \ {i}] and Q2(k) = #(i -> j -> a -> k).
std::vector<Layer> path4_layers() {
  return {
      {{kNbrBranch}, {off_pair() * a(0)}},
      {{n(0)}, {s(0), off_pair() * a(0)}},
      {{n(1) - nbr_off_pair() * s(0)}, {s(0), s(1), off_pair() * a(0)}},
  };
}

MPProgram make(std::string name, BagMode mode, std::vector<Layer> layers) {
  return {std::move(name), mode, std::move(layers)};
}

CountingProgram path2() {
  // deg(k), then Σ_{j ∈ N(i)} (deg(j) - 1).
  return {make("path2", BagMode::plain, {{{Expr(1)}, {a(0)}}, {{n(0) - 1}, {a(0)}}}),
          {std::nullopt, sum_of({s(0)}), graph_sum(2)}};
}

CountingProgram path3() {
  return {make("path3", BagMode::subgraph, path3_layers()), {std::nullopt, sum_of({s(2)}), graph_sum(2)}};
}

CountingProgram cycle3() {
  // A triangle at i is a 2-path from i back to a neighbor of i; each one is
  // seen from both of its other nodes.
  return {make("cycle3", BagMode::subgraph, {{{kNbrRootNbr}, {off_root() * a(0)}}}),
          {std::nullopt, sum_of({kRootNbr * s(0)}, 2), graph_sum(3)}};
}

CountingProgram cycle4() {
  return {make("cycle4", BagMode::subgraph, path3_layers()),
          {std::nullopt, sum_of({kRootNbr * s(2)}, 2), graph_sum(4)}};
}

CountingProgram path4() {
  return {make("path4", BagMode::pair, path4_layers()),
          {sum_of({s(2)}), sum_of({s(0)}), graph_sum(2)}};
}

CountingProgram cycle5() {
  // 4-paths i -> j -> ... -> k closing through an edge (k, i); each 5-cycle
  // at i is found once from each of its two edges at i.
  return {make("cycle5", BagMode::pair, path4_layers()),
          {sum_of({kRootNbr * s(2)}), sum_of({s(0)}, 2), graph_sum(5)}};
}

CountingProgram cycle6() {
  // State components.
  enum : std::size_t { q1, p2, h4, c3, q2, p4, h1 };
  std::vector<Layer> layers;
  layers.push_back({{kNbrBranch, kNbrRootNbr, kNbrRootNbr * kNbrBranchNbr, kNbrBranchNbr},
                    {
                        off_root() * a(0),                    // q1 = 1[k ∈ N(j) \ {i}]
                        off_root() * a(1),                    // p2 = P2(i, k)
                        off_pair() * kBranchNbr * a(2),       // h4 = #(N(i) ∩ N(j) ∩ N(k)), k ∈ N(j)
                        a(3),                                 // c3 = #(N(j) ∩ N(k))
                    }});
  layers.push_back({{n(q1)}, {s(q1), s(p2), s(h4), s(c3), off_pair() * a(0)}});
  layers.push_back({{
                        n(q2) - nbr_off_pair() * s(q1),
                        // 4-paths whose last inner node is a neighbor of i
                        kNbrRootNbr * (1 - kNbrBranch) * (n(q2) - s(q1)),
                    },
                    {s(q1), s(p2), s(h4), s(c3), s(q2), off_pair() * a(0), off_pair() * a(1)}});

  Aggregation edge;
  edge.terms = {
      s(p4) * s(p2),                                // #0 terms
      s(h1),                                        // #1
      s(q1) * s(p4),                                // #3: the 4-path's second node closes the 2-path
      s(h4),                                        // 2 #4
      kRootNbr * kBranchNbr,                        // C3(i, j)
      s(q1) * (s(c3) - kRootNbr),                   // Σ_{k ∈ N(j) \ {i}} (C3(j, k) - 1[k ∈ N(i)])
      kRootNbr * kBranchNbr * (s(c3) - 1),          // same sum over k ∈ N(i) ∩ N(j)
  };
  edge.outputs = {{a(0)}, {a(1)}, {a(4) * a(5) - a(6)}, {a(2)}, {a(3)}};

  Aggregation node;
  node.terms = {s(0), s(1), s(2), s(3), s(4)};
  // Every 6-cycle at i is reached twice by the #0 sum, once per direction.
  node.outputs = {
      {a(0) - a(1) - (a(2) - a(4)) - a(3), 2},
      {a(0)},
      {a(1)},
      {a(2) - a(4)},
      {a(3)},
      {a(4), 2},
  };
  return {make("cycle6", BagMode::pair, std::move(layers)), {std::move(edge), std::move(node), graph_sum(6)}};
}

CountingProgram clique4() {
  // Common neighbors of i and j, then adjacent pairs among them.
  return {make("clique4", BagMode::pair,
               {{{kNbrRoot, kNbrBranch}, {off_pair() * a(0) * a(1)}}, {{n(0)}, {s(0) * a(0)}}}),
          {sum_of({s(0)}), sum_of({s(0)}, 6), graph_sum(4)}};
}

CountingProgram chordal_cycle() {
  // m ∈ N(i) ∩ N(j) closes the chord (j, m); k ∈ N(j) ∩ N(m) is the far node.
  return {make("chordal_cycle", BagMode::pair,
               {{{kNbrRoot, kNbrBranch}, {a(0) * a(1)}}, {{n(0)}, {off_pair() * a(0)}}}),
          {sum_of({kBranchNbr * s(0)}), sum_of({s(0)}, 2), graph_sum(2)}};
}

CountingProgram tailed_triangle() {
  // Triangles at i that avoid the tail j.
  return {make("tailed_triangle", BagMode::pair,
               {{{kNbrRoot}, {off_pair() * a(0)}}, {{n(0)}, {s(0) * a(0)}}}),
          {sum_of({s(0)}, 2), sum_of({s(0)}), graph_sum(1)}};
}

CountingProgram triangle_rectangle() {
  // P4(i -> j -> ... -> m) with m ∈ N(i) ∩ N(j) is a 3-path from j to m
  // avoiding i; together with the triangle (i, j, m) it forms the graphlet.
  // Swapping j and m finds it again.
  return {make("triangle_rectangle", BagMode::pair, path4_layers()),
          {sum_of({kRootNbr * kBranchNbr * s(2)}), sum_of({s(0)}, 2), graph_sum(1)}};
}

CountingProgram walks(unsigned length) {
  if (length < 1) throw PreconditionError("walk length must be at least 1");
  std::vector<Layer> layers{{{}, {kRoot}}};
  for (unsigned t = 0; t < length; ++t) layers.push_back({{n(0)}, {a(0)}});
  return {make("walk" + std::to_string(length), BagMode::subgraph, std::move(layers)),
          {std::nullopt, sum_of({kRoot * s(0)}), graph_sum(1)}};
}

}  // namespace

std::string_view to_string(Substructure kind) {
  switch (kind) {
    case Substructure::path2: return "path2";
    case Substructure::path3: return "path3";
    case Substructure::path4: return "path4";
    case Substructure::cycle3: return "cycle3";
    case Substructure::cycle4: return "cycle4";
    case Substructure::cycle5: return "cycle5";
    case Substructure::cycle6: return "cycle6";
    case Substructure::tailed_triangle: return "tailed_triangle";
    case Substructure::chordal_cycle: return "chordal_cycle";
    case Substructure::clique4: return "clique4";
    case Substructure::path4_graphlet: return "path4_graphlet";
    case Substructure::triangle_rectangle: return "triangle_rectangle";
    case Substructure::walk: return "walk";
  }
  return "?";
}

std::vector<Substructure> counted_substructures() {
  return {Substructure::path2,          Substructure::path3,          Substructure::path4,
          Substructure::cycle3,         Substructure::cycle4,         Substructure::cycle5,
          Substructure::cycle6,         Substructure::tailed_triangle, Substructure::chordal_cycle,
          Substructure::clique4,        Substructure::path4_graphlet, Substructure::triangle_rectangle};
}

Substructure parse_substructure(std::string_view name, unsigned* walk_length) {
  for (Substructure k : counted_substructures()) {
    if (to_string(k) == name) return k;
  }
  if (name.starts_with("walk")) {
    const std::string_view digits = name.substr(4);
    unsigned len = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), len);
    if (!digits.empty() && ec == std::errc() && p == digits.data() + digits.size() && len >= 1) {
      if (walk_length) *walk_length = len;
      return Substructure::walk;
    }
  }
  throw ParseError("unknown substructure '" + std::string(name) + "'");
}

KindInfo kind_info(Substructure kind, unsigned /*walk_length*/) {
  switch (kind) {
    case Substructure::path2: return {BagMode::plain, 0, 0, 2};
    case Substructure::path3: return {BagMode::subgraph, 3, 3, 2};
    case Substructure::path4:
    case Substructure::path4_graphlet: return {BagMode::pair, 4, 4, 2};
    case Substructure::cycle3: return {BagMode::subgraph, 1, 1, 3};
    case Substructure::cycle4: return {BagMode::subgraph, 2, 2, 4};
    case Substructure::cycle5: return {BagMode::pair, 2, 2, 5};
    case Substructure::cycle6: return {BagMode::pair, 3, 3, 6};
    case Substructure::tailed_triangle: return {BagMode::pair, 2, 1, 1};
    case Substructure::chordal_cycle: return {BagMode::pair, 2, 2, 2};
    case Substructure::clique4: return {BagMode::pair, 1, 1, 4};
    case Substructure::triangle_rectangle: return {BagMode::pair, 2, 2, 1};
    case Substructure::walk: return {BagMode::subgraph, 0, 0, 1};
  }
  throw InternalError("unknown substructure");
}

CountingProgram counting_program(Substructure kind, unsigned walk_length) {
  switch (kind) {
    case Substructure::path2: return path2();
    case Substructure::path3: return path3();
    case Substructure::path4: return path4();
    case Substructure::path4_graphlet: {
      CountingProgram p = path4();
      p.program.name = "path4_graphlet";
      return p;
    }
    case Substructure::cycle3: return cycle3();
    case Substructure::cycle4: return cycle4();
    case Substructure::cycle5: return cycle5();
    case Substructure::cycle6: return cycle6();
    case Substructure::tailed_triangle: return tailed_triangle();
    case Substructure::chordal_cycle: return chordal_cycle();
    case Substructure::clique4: return clique4();
    case Substructure::triangle_rectangle: return triangle_rectangle();
    case Substructure::walk:
      if (walk_length < 1) throw PreconditionError("walk length must be at least 1");
      return walks(walk_length);
  }
  throw InternalError("unknown substructure");
}

std::vector<std::string> pattern_names(Substructure kind) {
  if (kind == Substructure::cycle6) return {"p0", "p1", "p2", "p3", "p4"};
  return {};
}

}  // namespace subcount
