//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcount/engine.hpp"
#include "subcount/graph.hpp"
#include "subcount/io.hpp"

namespace subcount {

enum class Substructure {
  path2,
  path3,
  path4,
  cycle3,
  cycle4,
  cycle5,
  cycle6,
  tailed_triangle,
  chordal_cycle,
  clique4,
  path4_graphlet,  // the 4-path drawn as a graphlet; same counts as path4
  triangle_rectangle,
  walk,            // closed walks of a given length
};

std::string_view to_string(Substructure kind);
/// Accepts the enum names plus "walk<L>" (e.g. "walk4").
Substructure parse_substructure(std::string_view name, unsigned* walk_length = nullptr);
std::vector<Substructure> counted_substructures();  // every kind except walk

/// Node position conventions (non-induced copies):
///   pathL            i is an endpoint
///   cycleL, clique4  i is on the cycle / clique
///   chordal_cycle    i is one of the two nodes not on the chord
///   tailed_triangle  i is the triangle node that carries the tail
///   triangle_rectangle  i is the triangle node outside the 4-cycle
///   walk             closed walks starting and ending at i
struct KindInfo {
  BagMode mode;
  unsigned default_hops;
  unsigned min_hops;
  Count graph_divisor;  // C(S, G) = Σ_i C(S, i, G) / graph_divisor
};
KindInfo kind_info(Substructure kind, unsigned walk_length = 0);

/// The program and readout plan for a kind. Node outputs start with the
/// count C(S, i, G); cycle6 appends #0..#4.
struct CountingProgram {
  MPProgram program;
  ReadoutPlan plan;
};
CountingProgram counting_program(Substructure kind, unsigned walk_length = 0);

/// Names of the extra node columns for a kind (cycle6: p0..p4).
std::vector<std::string> pattern_names(Substructure kind);

struct CountOptions {
  std::optional<unsigned> hops;  // default per kind_info()
  unsigned walk_length = 4;
  unsigned threads = 1;
};

struct CountReport {
  Substructure kind = Substructure::path2;
  unsigned hops = 0;
  unsigned walk_length = 0;
  std::vector<Count> node;                   // C(S, i, G)
  Count graph = 0;                           // C(S, G)
  std::vector<std::string> pattern_names;    // cycle6: p0..p4
  std::vector<std::vector<Count>> patterns;  // per node, aligned with pattern_names
  PhaseTimes times;
};

/// Throws PreconditionError when hops are below the kind's minimum,
/// OverflowError on overflow, InternalError on a broken counting identity.
CountReport count_substructure(const Graph& g, Substructure kind, const CountOptions& options = {});

CountReport count_path2_node(const Graph& g);
CountReport count_path3_node(const Graph& g, unsigned hops = 3);
CountReport count_path4_node(const Graph& g, unsigned hops = 4);
CountReport count_cycle3_node(const Graph& g, unsigned hops = 1);
CountReport count_cycle4_node(const Graph& g, unsigned hops = 2);
CountReport count_cycle5_node(const Graph& g, unsigned hops = 2);
CountReport count_cycle6_node(const Graph& g, unsigned hops = 3);
CountReport count_clique4_node(const Graph& g, unsigned hops = 1);
CountReport count_chordal_cycle_node(const Graph& g, unsigned hops = 2);
CountReport count_tailed_triangle_node(const Graph& g, unsigned hops = 2);
CountReport count_triangle_rectangle_node(const Graph& g, unsigned hops = 2);

/// P4(i -> j -> ... -> k) for every ordered edge (i, j) and node k.
struct Path4Entry {
  NodeId root;
  NodeId branching;
  NodeId target;
  Count paths;
};
/// Nonzero entries ordered by (root, branching, target).
std::vector<Path4Entry> count_path4_edge(const Graph& g, unsigned hops = 4);

/// Number of length-L walks from i to j, computed by message passing.
Count count_walks(const Graph& g, unsigned length, NodeId i, NodeId j);

struct CorpusStats {
  std::string name;
  std::size_t graphs = 0;
  std::array<double, 4> mean_cycles{};  // 3-, 4-, 5-, 6-cycles per graph
  std::vector<std::string> errors;      // one line per unreadable file
};

/// Each file may hold several graphs (graph6) or one (edge list).
CorpusStats corpus_cycle_stats(const std::vector<std::filesystem::path>& paths, GraphFormat format,
                               std::string name = "corpus", unsigned threads = 1);
CorpusStats corpus_cycle_stats(const std::vector<Graph>& graphs, std::string name = "corpus", unsigned threads = 1);

}  // namespace subcount
