//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subcount/graph.hpp"

namespace subcount {

using LocalIndex = std::uint32_t;

enum class Labeling { identity, spd };

enum class ExtractionKind {
  node_deletion,  // V \ {root}, root remembered as metadata
  ego,            // subgraph induced by nodes within `hops` of the root
  full,           // the whole graph, root marked
};

struct ExtractionPolicy {
  ExtractionKind kind = ExtractionKind::ego;
  unsigned hops = 1;

  static ExtractionPolicy ego(unsigned k) { return {ExtractionKind::ego, k}; }
  static ExtractionPolicy node_deletion() { return {ExtractionKind::node_deletion, 0}; }
  static ExtractionPolicy full() { return {ExtractionKind::full, 0}; }

  friend bool operator==(const ExtractionPolicy&, const ExtractionPolicy&) = default;
};

Labeling parse_labeling(std::string_view name);
/// "ego:<k>", "node_deletion" or "full".
ExtractionPolicy parse_policy(std::string_view name, unsigned hops = 1);
std::string to_string(ExtractionPolicy policy);

/// Node-induced piece of a parent graph with its own dense local indexing.
/// `nodes` holds parent ids in ascending order, so local index order matches
/// parent order.
struct LocalGraph {
  std::vector<NodeId> nodes;
  std::vector<std::uint32_t> offsets;
  std::vector<LocalIndex> targets;
  std::vector<std::int64_t> edge_labels;  // aligned with targets, or empty

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t num_edges() const noexcept { return targets.size() / 2; }
  std::span<const LocalIndex> neighbors(LocalIndex k) const noexcept {
    return std::span<const LocalIndex>(targets).subspan(offsets[k], offsets[k + 1] - offsets[k]);
  }
  std::optional<LocalIndex> local_index(NodeId parent) const noexcept;
};

/// Precomputed per-node labels a message-passing program may read.
enum class LabelKind : std::uint8_t {
  is_root,     // 1 iff k = i
  is_branch,   // 1 iff k = j
  root_nbr,    // 1 iff k ∈ N(i)
  branch_nbr,  // 1 iff k ∈ N(j)
  spd_root,    // spd(i, k), -1 when unreachable
  spd_branch,  // spd(j, k) inside the subgraph, -1 when unreachable
};
inline constexpr std::size_t kLabelKinds = 6;

std::string_view to_string(LabelKind kind);

/// A subgraph tied to a root node i and, in pair mode, a branching node
/// j ∈ N(i). Several RootedSubgraphs of one root share the same LocalGraph.
struct RootedSubgraph {
  NodeId root = 0;
  std::optional<NodeId> branching;
  std::shared_ptr<const LocalGraph> graph;
  Labeling labeling = Labeling::identity;
  ExtractionPolicy policy;
  std::uint32_t available = 0;        // bitmask over LabelKind
  std::vector<std::int64_t> table;    // size() * kLabelKinds, row-major

  std::size_t size() const noexcept { return graph ? graph->size() : 0; }

  bool provides(LabelKind kind) const noexcept {
    return (available >> static_cast<unsigned>(kind)) & 1U;
  }
  std::int64_t label(LocalIndex k, LabelKind kind) const noexcept {
    return table[k * kLabelKinds + static_cast<std::size_t>(kind)];
  }
  const std::int64_t* label_row(LocalIndex k) const noexcept { return table.data() + k * kLabelKinds; }

  /// The node labeling z as a vector: identity gives (1[k=i]) or
  /// (1[k=i], 1[k=j]); spd gives (spd(i,k)) or (spd(i,k), spd(j,k)).
  std::vector<std::int64_t> labels(LocalIndex k) const;

  /// Local index of the root, absent under node deletion.
  std::optional<LocalIndex> root_local() const noexcept;
};

enum class BagMode {
  plain,     // one whole-graph "subgraph" without identifiers (ordinary MPNN)
  subgraph,  // one rooted subgraph per node
  pair,      // one subgraph per ordered adjacent pair (root, branching)
};

std::string_view to_string(BagMode mode);

struct SubgraphBag {
  BagMode mode = BagMode::subgraph;
  std::size_t parent_nodes = 0;
  std::vector<RootedSubgraph> items;  // ordered by root, then branching
};

RootedSubgraph extract_rooted(const Graph& g, NodeId root, ExtractionPolicy policy, Labeling labeling);

/// Same as extract_rooted() with a branching node j ∈ N(root); the node set
/// is the root's subgraph and j is marked inside it.
RootedSubgraph extract_pair(const Graph& g, NodeId root, NodeId branching, ExtractionPolicy policy,
                            Labeling labeling);

SubgraphBag extract_bag_plain(const Graph& g);
SubgraphBag extract_bag_subgraph_mpnn(const Graph& g, ExtractionPolicy policy, Labeling labeling,
                                      unsigned threads = 1);
/// One subgraph per ordered adjacent pair (i, j); node set EGO_hops(i).
SubgraphBag extract_bag_i2(const Graph& g, unsigned hops, Labeling labeling, unsigned threads = 1);
SubgraphBag extract_bag_i2(const Graph& g, ExtractionPolicy policy, Labeling labeling,
                           unsigned threads = 1);

}  // namespace subcount
