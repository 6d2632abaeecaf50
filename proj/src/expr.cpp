//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "subcount/error.hpp"

namespace subcount {

struct Expr::Node {
  Op op;
  Count value;
  std::vector<Expr> children;
};

Expr Expr::make(Op op, Count value, std::vector<Expr> children) {
  return Expr(std::make_shared<const Node>(Node{op, value, std::move(children)}));
}

Expr::Expr(Count value) : node_(std::make_shared<const Node>(Node{Op::constant, value, {}})) {}

Expr Expr::self(std::size_t c) { return make(Op::self, static_cast<Count>(c)); }
Expr Expr::nbr(std::size_t c) { return make(Op::nbr, static_cast<Count>(c)); }
Expr Expr::agg(std::size_t c) { return make(Op::agg, static_cast<Count>(c)); }
Expr Expr::label(LabelKind k) { return make(Op::self_label, static_cast<Count>(k)); }
Expr Expr::nbr_label(LabelKind k) { return make(Op::nbr_label, static_cast<Count>(k)); }
Expr Expr::attr(std::size_t c) { return make(Op::self_attr, static_cast<Count>(c)); }
Expr Expr::nbr_attr(std::size_t c) { return make(Op::nbr_attr, static_cast<Count>(c)); }
Expr Expr::edge() { return make(Op::edge, 0); }

Expr operator+(Expr a, Expr b) { return Expr::make(Expr::Op::add, 0, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::make(Expr::Op::sub, 0, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::make(Expr::Op::mul, 0, {std::move(a), std::move(b)}); }
Expr eq0(Expr e) { return Expr::make(Expr::Op::eq0, 0, {std::move(e)}); }
Expr ne0(Expr e) { return Expr::make(Expr::Op::ne0, 0, {std::move(e)}); }
Expr gt0(Expr e) { return Expr::make(Expr::Op::gt0, 0, {std::move(e)}); }

Expr::Op Expr::op() const noexcept { return node_->op; }
Count Expr::value() const noexcept { return node_->value; }
std::span<const Expr> Expr::children() const noexcept { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.value() != b.value()) return false;
  const auto ca = a.children(), cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::add:
    case Expr::Op::sub: return 1;
    case Expr::Op::mul: return 2;
    default: return 3;
  }
}

void print(const Expr& e, std::string& out) {
  using Op = Expr::Op;
  auto child = [&](const Expr& c, int min_prec) {
    const bool paren = precedence(c.op()) < min_prec;
    if (paren) out += '(';
    print(c, out);
    if (paren) out += ')';
  };
  switch (e.op()) {
    case Op::constant: out += std::to_string(e.value()); return;
    case Op::self: out += "self[" + std::to_string(e.value()) + "]"; return;
    case Op::nbr: out += "nbr[" + std::to_string(e.value()) + "]"; return;
    case Op::agg: out += "agg[" + std::to_string(e.value()) + "]"; return;
    case Op::self_label:
      out += "self.";
      out += to_string(static_cast<LabelKind>(e.value()));
      return;
    case Op::nbr_label:
      out += "nbr.";
      out += to_string(static_cast<LabelKind>(e.value()));
      return;
    case Op::self_attr: out += "self.x[" + std::to_string(e.value()) + "]"; return;
    case Op::nbr_attr: out += "nbr.x[" + std::to_string(e.value()) + "]"; return;
    case Op::edge: out += "edge"; return;
    case Op::add:
    case Op::sub:
      child(e.children()[0], 1);
      out += e.op() == Op::add ? " + " : " - ";
      child(e.children()[1], 2);
      return;
    case Op::mul:
      child(e.children()[0], 2);
      out += " * ";
      child(e.children()[1], 3);
      return;
    case Op::eq0:
    case Op::ne0:
    case Op::gt0:
      out += e.op() == Op::eq0 ? "eq0(" : e.op() == Op::ne0 ? "ne0(" : "gt0(";
      print(e.children()[0], out);
      out += ')';
      return;
  }
}

// ---------------------------------------------------------------------------
// Parsing: recursive descent over
//   expr := term (('+' | '-') term)*
//   term := unary ('*' unary)*
//   unary := '-' INT | primary

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  Count integer() {
    skip();
    Count v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  std::size_t index() {
    expect("[");
    const Count v = integer();
    if (v < 0) fail("negative component index");
    expect("]");
    return static_cast<std::size_t>(v);
  }
  std::string_view word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }
  LabelKind label_kind(std::string_view w) {
    for (std::size_t k = 0; k < kLabelKinds; ++k) {
      if (to_string(static_cast<LabelKind>(k)) == w) return static_cast<LabelKind>(k);
    }
    fail("unknown label '" + std::string(w) + "'");
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept("+")) {
        e = e + term();
      } else if (accept("-")) {
        e = e - term();
      } else {
        return e;
      }
    }
  }
  Expr term() {
    Expr e = unary();
    while (accept("*")) e = e * unary();
    return e;
  }
  Expr unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return Expr(-integer());
    }
    return primary();
  }
  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Expr(integer());
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    const std::string_view w = word();
    if (w == "eq0" || w == "ne0" || w == "gt0") {
      expect("(");
      Expr inner = expr();
      expect(")");
      return w == "eq0" ? eq0(inner) : w == "ne0" ? ne0(inner) : gt0(inner);
    }
    if (w == "edge") return Expr::edge();
    if (w == "agg") return Expr::agg(index());
    if (w == "self" || w == "nbr") {
      const bool self = w == "self";
      if (accept(".")) {
        const std::string_view l = word();
        if (l == "x") return self ? Expr::attr(index()) : Expr::nbr_attr(index());
        const LabelKind kind = label_kind(l);
        return self ? Expr::label(kind) : Expr::nbr_label(kind);
      }
      const std::size_t c = index();
      return self ? Expr::self(c) : Expr::nbr(c);
    }
    fail("unexpected token '" + std::string(w) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

Expr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

CompiledExpr::CompiledExpr(const Expr& e) { emit(e, 1); }

void CompiledExpr::emit(const Expr& e, std::size_t depth) {
  max_depth_ = std::max(max_depth_, depth);
  const auto kids = e.children();
  for (std::size_t k = 0; k < kids.size(); ++k) emit(kids[k], depth + k);
  code_.push_back({e.op(), e.value()});
}

Count CompiledExpr::eval(const EvalContext& ctx) const {
  constexpr std::size_t kInline = 32;
  std::array<Count, kInline> inline_stack{};
  std::vector<Count> heap_stack;
  Count* stack = inline_stack.data();
  if (max_depth_ > kInline) {
    heap_stack.resize(max_depth_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  using Op = Expr::Op;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::constant: stack[top++] = in.value; break;
      case Op::self: stack[top++] = ctx.self[in.value]; break;
      case Op::nbr: stack[top++] = ctx.nbr[in.value]; break;
      case Op::agg: stack[top++] = ctx.agg[in.value]; break;
      case Op::self_label: stack[top++] = ctx.self_labels[in.value]; break;
      case Op::nbr_label: stack[top++] = ctx.nbr_labels[in.value]; break;
      case Op::self_attr: stack[top++] = ctx.self_attrs[static_cast<std::size_t>(in.value)]; break;
      case Op::nbr_attr: stack[top++] = ctx.nbr_attrs[static_cast<std::size_t>(in.value)]; break;
      case Op::edge: stack[top++] = ctx.edge; break;
      case Op::add:
        --top;
        stack[top - 1] = checked_add(stack[top - 1], stack[top]);
        break;
      case Op::sub:
        --top;
        stack[top - 1] = checked_sub(stack[top - 1], stack[top]);
        break;
      case Op::mul:
        --top;
        stack[top - 1] = checked_mul(stack[top - 1], stack[top]);
        break;
      case Op::eq0: stack[top - 1] = stack[top - 1] == 0 ? 1 : 0; break;
      case Op::ne0: stack[top - 1] = stack[top - 1] != 0 ? 1 : 0; break;
      case Op::gt0: stack[top - 1] = stack[top - 1] > 0 ? 1 : 0; break;
    }
  }
  return stack[0];
}

}  // namespace subcount
