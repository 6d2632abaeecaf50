//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subcount/error.hpp"

namespace subcount {
namespace {

void require_length(std::size_t length) {
  if (length < 3) {
    throw PreconditionError("cycle length must be at least 3, got " + std::to_string(length));
  }
}

void add_cycle(std::vector<Edge>& edges, NodeId first, std::size_t length) {
  for (std::size_t k = 0; k < length; ++k) {
    const auto u = static_cast<NodeId>(first + k);
    const auto v = static_cast<NodeId>(first + (k + 1) % length);
    edges.push_back({u, v});
  }
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform
// unlike std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph gen_cycle(std::size_t length) {
  require_length(length);
  std::vector<Edge> edges;
  add_cycle(edges, 0, length);
  return Graph::from_edges(length, edges);
}

std::pair<Graph, Graph> gen_cycle_pair(std::size_t length) {
  require_length(length);
  std::vector<Edge> two;
  add_cycle(two, 0, length);
  add_cycle(two, static_cast<NodeId>(length), length);
  return {Graph::from_edges(2 * length, two), gen_cycle(2 * length)};
}

std::pair<Graph, Graph> gen_coned_cycles(std::size_t length) {
  require_length(length);
  std::vector<Edge> joined;
  add_cycle(joined, 1, 2 * length);
  std::vector<Edge> split;
  add_cycle(split, 1, length);
  add_cycle(split, static_cast<NodeId>(1 + length), length);
  for (NodeId v = 1; v <= 2 * length; ++v) {
    joined.push_back({0, v});
    split.push_back({0, v});
  }
  return {Graph::from_edges(2 * length + 1, joined), Graph::from_edges(2 * length + 1, split)};
}

Graph gen_rook4x4() {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 16; ++u) {
    for (NodeId v = u + 1; v < 16; ++v) {
      if (u / 4 == v / 4 || u % 4 == v % 4) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(16, edges);
}

Graph gen_shrikhande() {
  constexpr int kShifts[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 16; ++u) {
    const int a = static_cast<int>(u) / 4, b = static_cast<int>(u) % 4;
    for (const auto& s : kShifts) {
      const auto v = static_cast<NodeId>(((a + s[0]) % 4) * 4 + (b + s[1]) % 4);
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(16, edges);
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (n == 0) return Graph::from_edges(0, {});
  if (degree >= n || (n * degree) % 2 != 0) {
    throw PreconditionError("no simple " + std::to_string(degree) + "-regular graph on " +
                            std::to_string(n) + " nodes");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> stubs;
  // Pair stubs one at a time, drawing the partner uniformly among the
  // remaining stubs; restart from scratch when stuck.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    stubs.clear();
    for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      const NodeId u = stubs.back();
      stubs.pop_back();
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        const std::size_t k = rng() % stubs.size();
        const NodeId v = stubs[k];
        const auto key = std::minmax(u, v);
        if (u == v || seen.contains(key)) continue;
        seen.insert(key);
        edges.push_back({key.first, key.second});
        stubs[k] = stubs.back();
        stubs.pop_back();
        placed = true;
      }
      stuck = !placed;
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw Error("failed to sample a random regular graph");
}

Graph gen_path(std::size_t nodes) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < nodes; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(nodes, edges);
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (NodeId k = 0; k < 5; ++k) {
    edges.push_back({k, (k + 1) % 5});             // outer pentagon
    edges.push_back({k, k + 5});                   // spokes
    edges.push_back({k + 5, (k + 2) % 5 + 5});     // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph gen_paw() {
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  return Graph::from_edges(4, edges);
}

Graph gen_diamond() {
  const Edge edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph::from_edges(4, edges);
}

}  // namespace subcount
