//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace subcount {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Hop distance, or std::nullopt when the node is unreachable.
using Distance = std::optional<std::uint32_t>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Invariants established by the factory functions and never broken
/// afterwards: no self-loops, no duplicate edges, symmetric adjacency, and
/// every neighbor list sorted ascending. Instances are safe to share across
/// threads.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes an edge list. Throws ValidationError on a
  /// self-loop, duplicate edge or out-of-range endpoint.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  /// Same as from_edges() with one integer label per edge (index-aligned with
  /// `edges`) and an optional integer label vector per node.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::span<const std::int64_t> edge_labels,
                          std::vector<std::vector<std::int64_t>> node_labels = {});

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  /// Sorted neighbors of `i`. Throws std::out_of_range for an invalid node.
  std::span<const NodeId> neighbors(NodeId i) const;

  /// |N(i)|. Throws std::out_of_range for an invalid node.
  std::size_t degree(NodeId i) const;

  bool has_edge(NodeId u, NodeId v) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_node_labels() const noexcept { return !node_labels_.empty(); }
  bool has_edge_labels() const noexcept { return !edge_labels_.empty(); }

  /// Node label vector; empty when the graph carries no node labels.
  std::span<const std::int64_t> node_label(NodeId i) const;

  /// Label of edge (u, v); 0 when the graph carries no edge labels.
  std::int64_t edge_label(NodeId u, NodeId v) const;

  /// Raw CSR arrays. `edge_labels_csr()` is aligned with `targets()` or empty.
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> targets() const noexcept { return targets_; }
  std::span<const std::int64_t> edge_labels_csr() const noexcept { return edge_labels_; }

  /// Relabels node v as perm[v]. `perm` must be a permutation of 0..n-1.
  Graph permuted(std::span<const NodeId> perm) const;

  /// Disjoint union; nodes of `other` are shifted by num_nodes().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::int64_t> edge_labels_;
  std::vector<std::vector<std::int64_t>> node_labels_;

  void check_node(NodeId i) const;
};

/// BFS hop distances from `source`; nullopt marks unreachable nodes.
std::vector<Distance> shortest_path_distances(const Graph& g, NodeId source);

}  // namespace subcount
