//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <utility>

#include "subcount/graph.hpp"

namespace subcount {

/// Simple cycle on `length` >= 3 nodes, 0-1-...-(length-1)-0.
Graph gen_cycle(std::size_t length);

/// (two disjoint L-cycles, one 2L-cycle). Both are 2-regular on 2L nodes,
/// so 1-WL cannot tell them apart although their L-cycle counts differ.
std::pair<Graph, Graph> gen_cycle_pair(std::size_t length);

/// (apex joined to every node of a 2L-cycle, apex joined to every node of two
/// disjoint L-cycles). The apex is node 0 in both graphs; the rim nodes are
/// 1..2L, with the second graph's cycles on 1..L and L+1..2L.
std::pair<Graph, Graph> gen_coned_cycles(std::size_t length);

/// 4x4 Rook's graph: node 4*r + c, adjacent iff same row or same column.
Graph gen_rook4x4();

/// Shrikhande graph as the Cayley graph of Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}; node 4*a + b.
Graph gen_shrikhande();

/// Erdős–Rényi G(n, p). The bit stream depends only on `seed`.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Uniform-ish random d-regular simple graph via the pairing model with
/// restarts. Requires n*d even and d < n.
Graph gen_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

Graph gen_path(std::size_t nodes);
Graph gen_star(std::size_t leaves);
Graph gen_complete(std::size_t n);
Graph gen_petersen();
/// Triangle 0-1-2 with pendant node 3 attached to 0.
Graph gen_paw();
/// K4 minus the edge (2, 3); 0-1 is the chord.
Graph gen_diamond();

}  // namespace subcount
