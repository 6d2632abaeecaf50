//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcount/expr.hpp"
#include "subcount/extraction.hpp"

namespace subcount {

/// One synchronous round. Every node k first receives
///   agg = Σ_{l ∈ N(k)} messages(self = h_k, nbr = h_l, edge = label(k, l))
/// and then becomes h'_k = updates(self = h_k, agg). The state width after
/// the layer is updates.size().
struct Layer {
  std::vector<Expr> messages;
  std::vector<Expr> updates;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// A fixed program of layers over a zero-width initial state. Node labels and
/// attributes are read directly through label and attribute references.
struct MPProgram {
  std::string name;
  BagMode mode = BagMode::subgraph;
  std::vector<Layer> layers;

  std::size_t output_width() const noexcept { return layers.empty() ? 0 : layers.back().updates.size(); }

  /// Text form, one line per layer after a header line.
  std::string to_text() const;
  static MPProgram parse(std::string_view text);

  friend bool operator==(const MPProgram&, const MPProgram&) = default;
};

/// Reduction of a set of elements: each element contributes `terms`, summed
/// component-wise into agg; each output is then `expr(agg) / divisor`
/// with a zero-remainder check.
struct Aggregation {
  struct Output {
    Expr expr;
    Count divisor = 1;
    friend bool operator==(const Output&, const Output&) = default;
  };
  std::vector<Expr> terms;
  std::vector<Output> outputs;

  friend bool operator==(const Aggregation&, const Aggregation&) = default;
};

/// Readout stages applied after the program.
///   pair mode:     edge over the nodes of each (i, j) subgraph, then node over
///                  the edge results of i's pairs
///   subgraph mode: node over the nodes of i's subgraph
///   plain mode:    node over the single node i
/// Terms of the first stage read self[c], labels and attributes of the
/// element; later stages only read self[c] of the previous stage's outputs.
/// The optional graph stage reduces the node results.
struct ReadoutPlan {
  std::optional<Aggregation> edge;
  Aggregation node;
  std::optional<Aggregation> graph;

  std::string to_text() const;
  static ReadoutPlan parse(std::string_view text);

  friend bool operator==(const ReadoutPlan&, const ReadoutPlan&) = default;
};

/// Final per-node states of one subgraph.
struct StateTensor {
  std::size_t layer = 0;
  std::size_t width = 0;
  std::vector<Count> values;  // size() * width, row-major by local index

  std::size_t size() const noexcept { return width == 0 ? 0 : values.size() / width; }
  std::span<const Count> row(LocalIndex k) const noexcept {
    return std::span<const Count>(values).subspan(k * width, width);
  }
};

/// Checks that every reference is in range for the layer it appears in.
/// Throws ProgramError ("width mismatch") otherwise.
void validate(const MPProgram& prog);
void validate(const MPProgram& prog, const ReadoutPlan& plan);

/// Runs `prog` on one subgraph. `parent` supplies node attributes and is only
/// needed if the program reads them. Throws ProgramError when the program
/// needs a label the subgraph does not carry.
StateTensor run_program(const RootedSubgraph& sub, const MPProgram& prog, const Graph* parent = nullptr);

struct PhaseTimes {
  double extraction = 0;
  double message_passing = 0;
  double readout = 0;
};

struct RunOptions {
  unsigned threads = 1;
  const Graph* parent = nullptr;
  PhaseTimes* times = nullptr;  // accumulates message passing and readout
};

struct PairResult {
  NodeId root;
  NodeId branching;
  std::vector<Count> values;
};

struct BagResult {
  std::vector<std::vector<Count>> node;     // per parent node
  std::optional<std::vector<Count>> graph;  // present iff the plan has a graph stage
  std::vector<PairResult> edge;             // pair mode only, bag order
};

/// Throws ProgramError on a mode mismatch between bag, program and plan.
BagResult run_bag(const SubgraphBag& bag, const MPProgram& prog, const ReadoutPlan& plan,
                  const RunOptions& options = {});

}  // namespace subcount
