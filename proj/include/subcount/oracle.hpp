//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <vector>

#include "subcount/counting.hpp"
#include "subcount/graph.hpp"

namespace subcount {

/// Exhaustive reference counts. Everything here enumerates explicitly and
/// shares no code with the message-passing programs.
struct OracleOptions {
  double budget = 1e9;  // refuse when N * maxdeg^L exceeds this
  unsigned threads = 1;
};

struct PathCounts {
  std::vector<Count> endpoint;  // simple L-paths with node i as an endpoint
  Count graph = 0;              // each path once (smaller endpoint first)
};

/// L in 2..6.
PathCounts oracle_paths(const Graph& g, unsigned length, const OracleOptions& options = {});

/// Number of simple L-paths between i and k, as an n x n row-major matrix.
std::vector<Count> oracle_path_matrix(const Graph& g, unsigned length, const OracleOptions& options = {});

struct CycleCounts {
  std::vector<Count> node;  // cycles containing node i
  Count graph = 0;          // each cycle once
};

/// L in 3..8.
CycleCounts oracle_cycles(const Graph& g, unsigned length, const OracleOptions& options = {});

struct GraphletCounts {
  std::vector<Count> node;  // copies with i at the marked position
  Count graph = 0;          // copies, unmarked
};

/// clique4, chordal_cycle, tailed_triangle, triangle_rectangle, with the node
/// positions documented on Substructure.
GraphletCounts oracle_graphlets(const Graph& g, Substructure kind);

/// (A^L)_{ij} by dynamic programming.
Count oracle_walks(const Graph& g, unsigned length, NodeId i, NodeId j);

/// For every simple 4-path i - a - b - c - k and every m ∈ N(i) ∩ N(k), the
/// pair is tallied in p0, and additionally in p1 when m = c, p2 when m = b,
/// p3 when m = a. p4 counts diamonds i - {j, l} - k with chord (j, l) and
/// k != i, unordered in (j, l).
std::vector<std::array<Count, 5>> oracle_cycle6_patterns(const Graph& g);

/// Same layout as count_path4_edge().
std::vector<Path4Entry> oracle_path4_table(const Graph& g);

/// Report in the same shape as count_substructure(); hops is left at 0.
CountReport oracle_count(const Graph& g, Substructure kind, unsigned walk_length = 4,
                         const OracleOptions& options = {});

}  // namespace subcount
