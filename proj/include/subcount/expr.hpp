//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcount/checked.hpp"
#include "subcount/extraction.hpp"

namespace subcount {

/// Closed integer expression language for message, update and readout
/// functions.
///
///   self[c]       component c of the receiving node's state
///   nbr[c]        component c of the sending neighbor's state (messages)
///   agg[c]        component c of the summed messages (updates), or of the
///                 summed readout terms (readout outputs)
///   self.<label>  precomputed label of the receiving node, see LabelKind
///   nbr.<label>   label of the sending neighbor (messages)
///   self.x[c], nbr.x[c]  raw node attribute c
///   edge          label of the edge carrying the message
///   eq0(e), ne0(e), gt0(e)  indicators 1[e = 0], 1[e != 0], 1[e > 0]
///
/// combined with integer literals, +, - and *. All arithmetic is checked.
class Expr {
 public:
  enum class Op : std::uint8_t {
    constant,
    self,
    nbr,
    agg,
    self_label,
    nbr_label,
    self_attr,
    nbr_attr,
    edge,
    add,
    sub,
    mul,
    eq0,
    ne0,
    gt0,
  };

  Expr(Count value);  // NOLINT(google-explicit-constructor): literals read naturally in programs
  Expr(int value) : Expr(static_cast<Count>(value)) {}  // NOLINT

  static Expr self(std::size_t component);
  static Expr nbr(std::size_t component);
  static Expr agg(std::size_t component);
  static Expr label(LabelKind kind);
  static Expr nbr_label(LabelKind kind);
  static Expr attr(std::size_t component);
  static Expr nbr_attr(std::size_t component);
  static Expr edge();

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr eq0(Expr e);
  friend Expr ne0(Expr e);
  friend Expr gt0(Expr e);

  Op op() const noexcept;
  /// Literal value, component index or LabelKind, depending on op().
  Count value() const noexcept;
  std::span<const Expr> children() const noexcept;

  std::string to_string() const;
  static Expr parse(std::string_view text);

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, Count value, std::vector<Expr> children = {});

  std::shared_ptr<const Node> node_;
};

/// Read-only view of everything an expression may reference.
struct EvalContext {
  const Count* self = nullptr;
  const Count* nbr = nullptr;
  const Count* agg = nullptr;
  const std::int64_t* self_labels = nullptr;  // row of kLabelKinds entries
  const std::int64_t* nbr_labels = nullptr;
  std::span<const std::int64_t> self_attrs;
  std::span<const std::int64_t> nbr_attrs;
  std::int64_t edge = 0;
};

/// Postfix form of an Expr, evaluated on a small stack.
class CompiledExpr {
 public:
  explicit CompiledExpr(const Expr& e);
  Count eval(const EvalContext& ctx) const;

 private:
  struct Instr {
    Expr::Op op;
    Count value;
  };
  void emit(const Expr& e, std::size_t depth);
  std::vector<Instr> code_;
  std::size_t max_depth_ = 0;
};

}  // namespace subcount
