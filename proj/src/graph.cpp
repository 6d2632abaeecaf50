//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "subcount/error.hpp"

namespace subcount {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  return from_edges(node_count, edges, {}, {});
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::span<const std::int64_t> edge_labels,
                        std::vector<std::vector<std::int64_t>> node_labels) {
  if (!edge_labels.empty() && edge_labels.size() != edges.size()) {
    throw ValidationError("edge label count does not match edge count");
  }
  if (!node_labels.empty() && node_labels.size() != node_count) {
    throw ValidationError("node label count does not match node count");
  }
  if (node_count > std::numeric_limits<NodeId>::max()) {
    throw ValidationError("too many nodes");
  }

  struct Arc {
    NodeId from, to;
    std::int64_t label;
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= node_count || v >= node_count) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a node outside 0.." +
                            std::to_string(node_count == 0 ? 0 : node_count - 1));
    }
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    const std::int64_t label = edge_labels.empty() ? 0 : edge_labels[e];
    arcs.push_back({u, v, label});
    arcs.push_back({v, u, label});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  for (std::size_t k = 1; k < arcs.size(); ++k) {
    if (arcs[k].from == arcs[k - 1].from && arcs[k].to == arcs[k - 1].to) {
      throw ValidationError("duplicate edge (" + std::to_string(std::min(arcs[k].from, arcs[k].to)) +
                            ", " + std::to_string(std::max(arcs[k].from, arcs[k].to)) + ")");
    }
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const Arc& a : arcs) ++g.offsets_[a.from + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.reserve(arcs.size());
  for (const Arc& a : arcs) g.targets_.push_back(a.to);
  if (!edge_labels.empty()) {
    g.edge_labels_.reserve(arcs.size());
    for (const Arc& a : arcs) g.edge_labels_.push_back(a.label);
  }
  g.node_labels_ = std::move(node_labels);
  return g;
}

void Graph::check_node(NodeId i) const {
  if (i >= num_nodes()) {
    throw std::out_of_range("node " + std::to_string(i) + " out of range for graph with " +
                            std::to_string(num_nodes()) + " nodes");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(i);
  return std::span<const NodeId>(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::size_t Graph::degree(NodeId i) const {
  check_node(i);
  return offsets_[i + 1] - offsets_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  check_node(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::span<const std::int64_t> Graph::node_label(NodeId i) const {
  check_node(i);
  if (node_labels_.empty()) return {};
  return node_labels_[i];
}

std::int64_t Graph::edge_label(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw std::out_of_range("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  if (edge_labels_.empty()) return 0;
  return edge_labels_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

Graph Graph::permuted(std::span<const NodeId> perm) const {
  const std::size_t n = num_nodes();
  if (perm.size() != n) throw ValidationError("permutation size does not match node count");
  std::vector<bool> seen(n, false);
  for (NodeId p : perm) {
    if (p >= n || seen[p]) throw ValidationError("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> es;
  std::vector<std::int64_t> labels;
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
      const NodeId v = targets_[k];
      if (u < v) {
        es.push_back({perm[u], perm[v]});
        if (!edge_labels_.empty()) labels.push_back(edge_labels_[k]);
      }
    }
  }
  std::vector<std::vector<std::int64_t>> nl;
  if (!node_labels_.empty()) {
    nl.resize(n);
    for (NodeId u = 0; u < n; ++u) nl[perm[u]] = node_labels_[u];
  }
  return from_edges(n, es, labels, std::move(nl));
}

Graph Graph::disjoint_union(const Graph& other) const {
  const auto shift = static_cast<NodeId>(num_nodes());
  std::vector<Edge> es = edges();
  std::vector<std::int64_t> labels;
  const bool labelled = has_edge_labels() || other.has_edge_labels();
  if (labelled) {
    for (const Edge& e : es) labels.push_back(edge_label(e.u, e.v));
  }
  for (const Edge& e : other.edges()) {
    es.push_back({e.u + shift, e.v + shift});
    if (labelled) labels.push_back(other.edge_label(e.u, e.v));
  }
  std::vector<std::vector<std::int64_t>> nl;
  if (has_node_labels() || other.has_node_labels()) {
    nl.resize(num_nodes() + other.num_nodes());
    for (NodeId u = 0; u < num_nodes(); ++u) {
      auto l = node_label(u);
      nl[u].assign(l.begin(), l.end());
    }
    for (NodeId u = 0; u < other.num_nodes(); ++u) {
      auto l = other.node_label(u);
      nl[u + shift].assign(l.begin(), l.end());
    }
  }
  return from_edges(num_nodes() + other.num_nodes(), es, labels, std::move(nl));
}

std::vector<Distance> shortest_path_distances(const Graph& g, NodeId source) {
  if (source >= g.num_nodes()) {
    throw std::out_of_range("source " + std::to_string(source) + " out of range");
  }
  std::vector<Distance> dist(g.num_nodes());
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace subcount
