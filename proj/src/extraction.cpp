//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/extraction.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

#include "subcount/error.hpp"
#include "subcount/parallel.hpp"

namespace subcount {
namespace {

constexpr std::uint32_t bit(LabelKind k) { return 1U << static_cast<unsigned>(k); }

void check_policy(const ExtractionPolicy& policy) {
  if (policy.kind == ExtractionKind::ego && policy.hops < 1) {
    throw PreconditionError("ego-network extraction needs hops >= 1");
  }
}

void check_node(const Graph& g, NodeId v) {
  if (v >= g.num_nodes()) {
    throw std::out_of_range("node " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(g.num_nodes()) + " nodes");
  }
}

// Hop distances from `source` truncated at `limit` (-1 = unreachable/beyond).
std::vector<int> bfs(const Graph& g, NodeId source, unsigned limit) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (static_cast<unsigned>(dist[u]) == limit) continue;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

// Nodes within `limit` hops of `source` with their distances, in BFS order.
// Touches only the ball, so per-root cost does not grow with the graph.
std::vector<std::pair<NodeId, int>> ball(const Graph& g, NodeId source, unsigned limit) {
  thread_local std::vector<int> dist;
  if (dist.size() < g.num_nodes()) dist.resize(g.num_nodes(), -1);
  std::vector<std::pair<NodeId, int>> order{{source, 0}};
  dist[source] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [u, d] = order[head];
    if (static_cast<unsigned>(d) == limit) continue;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = d + 1;
        order.emplace_back(v, d + 1);
      }
    }
  }
  for (const auto& [v, d] : order) dist[v] = -1;
  return order;
}

std::vector<int> local_bfs(const LocalGraph& lg, LocalIndex source) {
  std::vector<int> dist(lg.size(), -1);
  std::deque<LocalIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const LocalIndex u = queue.front();
    queue.pop_front();
    for (LocalIndex v : lg.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::shared_ptr<const LocalGraph> induce(const Graph& g, std::vector<NodeId> nodes) {
  auto lg = std::make_shared<LocalGraph>();
  std::sort(nodes.begin(), nodes.end());
  lg->nodes = std::move(nodes);
  lg->offsets.reserve(lg->nodes.size() + 1);
  lg->offsets.push_back(0);
  const auto labels = g.edge_labels_csr();
  const auto offsets = g.offsets();
  for (NodeId u : lg->nodes) {
    const auto nbrs = g.neighbors(u);
    // Both lists are sorted: merge instead of a lookup per neighbor.
    auto it = lg->nodes.begin();
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      it = std::lower_bound(it, lg->nodes.end(), nbrs[k]);
      if (it == lg->nodes.end()) break;
      if (*it == nbrs[k]) {
        lg->targets.push_back(static_cast<LocalIndex>(it - lg->nodes.begin()));
        if (!labels.empty()) lg->edge_labels.push_back(labels[offsets[u] + k]);
      }
    }
    lg->offsets.push_back(static_cast<std::uint32_t>(lg->targets.size()));
  }
  return lg;
}

struct RootContext {
  std::shared_ptr<const LocalGraph> graph;
  std::vector<int> spd_root;  // per local node, -1 when unreachable
};

RootContext build_root_context(const Graph& g, NodeId root, const ExtractionPolicy& policy) {
  check_node(g, root);
  check_policy(policy);
  RootContext ctx;
  std::vector<NodeId> nodes;
  if (policy.kind == ExtractionKind::ego) {
    auto order = ball(g, root, policy.hops);
    std::sort(order.begin(), order.end());
    nodes.reserve(order.size());
    for (const auto& [v, d] : order) {
      nodes.push_back(v);
      ctx.spd_root.push_back(d);
    }
    ctx.graph = induce(g, std::move(nodes));
    return ctx;
  }
  const std::vector<int> dist = bfs(g, root, static_cast<unsigned>(g.num_nodes()));
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (policy.kind == ExtractionKind::full || v != root) nodes.push_back(v);
  }
  ctx.graph = induce(g, std::move(nodes));
  ctx.spd_root.reserve(ctx.graph->size());
  for (NodeId v : ctx.graph->nodes) ctx.spd_root.push_back(dist[v]);
  return ctx;
}

RootedSubgraph make_rooted(const Graph& g, NodeId root, std::optional<NodeId> branching,
                           const RootContext& ctx, const ExtractionPolicy& policy,
                           Labeling labeling) {
  RootedSubgraph sub;
  sub.root = root;
  sub.branching = branching;
  sub.graph = ctx.graph;
  sub.labeling = labeling;
  sub.policy = policy;
  const LocalGraph& lg = *ctx.graph;
  const std::size_t n = lg.size();
  sub.table.assign(n * kLabelKinds, 0);
  auto set = [&](LocalIndex k, LabelKind kind, std::int64_t v) {
    sub.table[k * kLabelKinds + static_cast<std::size_t>(kind)] = v;
  };

  for (LocalIndex k = 0; k < n; ++k) {
    set(k, LabelKind::spd_root, ctx.spd_root[k]);
    set(k, LabelKind::root_nbr, ctx.spd_root[k] == 1 ? 1 : 0);
    set(k, LabelKind::spd_branch, -1);
  }
  if (const auto r = lg.local_index(root)) set(*r, LabelKind::is_root, 1);

  if (branching) {
    const auto jl = lg.local_index(*branching);
    if (!jl) throw PreconditionError("branching node is not inside the root's subgraph");
    set(*jl, LabelKind::is_branch, 1);
    for (LocalIndex v : lg.neighbors(*jl)) set(v, LabelKind::branch_nbr, 1);
    if (labeling == Labeling::spd) {
      const auto d = local_bfs(lg, *jl);
      for (LocalIndex k = 0; k < n; ++k) set(k, LabelKind::spd_branch, d[k]);
    }
  }

  sub.available = bit(LabelKind::root_nbr);
  if (labeling == Labeling::identity) {
    sub.available |= bit(LabelKind::is_root);
    if (branching) sub.available |= bit(LabelKind::is_branch) | bit(LabelKind::branch_nbr);
  } else {
    sub.available |= bit(LabelKind::spd_root);
    if (branching) sub.available |= bit(LabelKind::spd_branch) | bit(LabelKind::branch_nbr);
  }
  (void)g;
  return sub;
}

}  // namespace

std::optional<LocalIndex> LocalGraph::local_index(NodeId parent) const noexcept {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), parent);
  if (it == nodes.end() || *it != parent) return std::nullopt;
  return static_cast<LocalIndex>(it - nodes.begin());
}

std::string_view to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::is_root: return "root";
    case LabelKind::is_branch: return "branch";
    case LabelKind::root_nbr: return "root_nbr";
    case LabelKind::branch_nbr: return "branch_nbr";
    case LabelKind::spd_root: return "spd_root";
    case LabelKind::spd_branch: return "spd_branch";
  }
  return "?";
}

std::string_view to_string(BagMode mode) {
  switch (mode) {
    case BagMode::plain: return "plain";
    case BagMode::subgraph: return "subgraph";
    case BagMode::pair: return "pair";
  }
  return "?";
}

Labeling parse_labeling(std::string_view name) {
  if (name == "identity") return Labeling::identity;
  if (name == "spd") return Labeling::spd;
  throw ParseError("unknown labeling '" + std::string(name) + "' (expected identity or spd)");
}

ExtractionPolicy parse_policy(std::string_view name, unsigned hops) {
  if (name == "node_deletion") return ExtractionPolicy::node_deletion();
  if (name == "full") return ExtractionPolicy::full();
  if (name == "ego") return ExtractionPolicy::ego(hops);
  if (name.starts_with("ego:")) {
    unsigned k = 0;
    const auto digits = name.substr(4);
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || p != digits.data() + digits.size()) {
      throw ParseError("bad hop count in policy '" + std::string(name) + "'");
    }
    return ExtractionPolicy::ego(k);
  }
  throw ParseError("unknown extraction policy '" + std::string(name) + "'");
}

std::string to_string(ExtractionPolicy policy) {
  switch (policy.kind) {
    case ExtractionKind::node_deletion: return "node_deletion";
    case ExtractionKind::full: return "full";
    case ExtractionKind::ego: return "ego:" + std::to_string(policy.hops);
  }
  return "?";
}

std::vector<std::int64_t> RootedSubgraph::labels(LocalIndex k) const {
  std::vector<std::int64_t> z;
  if (labeling == Labeling::identity) {
    z.push_back(label(k, LabelKind::is_root));
    if (branching) z.push_back(label(k, LabelKind::is_branch));
  } else {
    z.push_back(label(k, LabelKind::spd_root));
    if (branching) z.push_back(label(k, LabelKind::spd_branch));
  }
  return z;
}

std::optional<LocalIndex> RootedSubgraph::root_local() const noexcept {
  if (!graph) return std::nullopt;
  return graph->local_index(root);
}

RootedSubgraph extract_rooted(const Graph& g, NodeId root, ExtractionPolicy policy,
                              Labeling labeling) {
  return make_rooted(g, root, std::nullopt, build_root_context(g, root, policy), policy, labeling);
}

RootedSubgraph extract_pair(const Graph& g, NodeId root, NodeId branching, ExtractionPolicy policy,
                            Labeling labeling) {
  check_node(g, branching);
  if (!g.has_edge(root, branching)) {
    throw PreconditionError("branching node " + std::to_string(branching) +
                            " is not a neighbor of root " + std::to_string(root));
  }
  if (policy.kind == ExtractionKind::node_deletion) {
    throw PreconditionError("pair subgraphs need the root inside the subgraph");
  }
  return make_rooted(g, root, branching, build_root_context(g, root, policy), policy, labeling);
}

SubgraphBag extract_bag_plain(const Graph& g) {
  SubgraphBag bag;
  bag.mode = BagMode::plain;
  bag.parent_nodes = g.num_nodes();
  std::vector<NodeId> all(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) all[v] = v;
  RootedSubgraph whole;
  whole.graph = induce(g, std::move(all));
  whole.policy = ExtractionPolicy::full();
  whole.table.assign(whole.size() * kLabelKinds, 0);
  bag.items.push_back(std::move(whole));
  return bag;
}

SubgraphBag extract_bag_subgraph_mpnn(const Graph& g, ExtractionPolicy policy, Labeling labeling,
                                      unsigned threads) {
  check_policy(policy);
  SubgraphBag bag;
  bag.mode = BagMode::subgraph;
  bag.parent_nodes = g.num_nodes();
  bag.items.resize(g.num_nodes());
  parallel_for(g.num_nodes(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      bag.items[i] = extract_rooted(g, static_cast<NodeId>(i), policy, labeling);
    }
  });
  return bag;
}

SubgraphBag extract_bag_i2(const Graph& g, unsigned hops, Labeling labeling, unsigned threads) {
  return extract_bag_i2(g, ExtractionPolicy::ego(hops), labeling, threads);
}

SubgraphBag extract_bag_i2(const Graph& g, ExtractionPolicy policy, Labeling labeling,
                           unsigned threads) {
  check_policy(policy);
  if (policy.kind == ExtractionKind::node_deletion) {
    throw PreconditionError("pair subgraphs need the root inside the subgraph");
  }
  SubgraphBag bag;
  bag.mode = BagMode::pair;
  bag.parent_nodes = g.num_nodes();
  const auto offsets = g.offsets();
  bag.items.resize(g.targets().size());
  parallel_for(g.num_nodes(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto root = static_cast<NodeId>(i);
      if (g.degree(root) == 0) continue;
      const RootContext ctx = build_root_context(g, root, policy);
      std::size_t slot = offsets[i];
      for (NodeId j : g.neighbors(root)) {
        bag.items[slot++] = make_rooted(g, root, j, ctx, policy, labeling);
      }
    }
  });
  return bag;
}

}  // namespace subcount
