//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/engine.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <mutex>
#include <sstream>

#include "subcount/error.hpp"
#include "subcount/parallel.hpp"

namespace subcount {

// ---------------------------------------------------------------------------
// Text format
//
//   program <name> mode=<plain|subgraph|pair>
//   layer messages: <e>; <e> | updates: <e>; <e>
//
//   edge terms: <e>; <e> | outputs: <e> / <d>; <e>
//   node terms: ... | outputs: ...
//   graph terms: ... | outputs: ...

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

// "<key>: a; b" -> {a, b}
std::vector<std::string_view> keyed_list(std::string_view part, std::string_view key) {
  part = trim(part);
  if (!part.starts_with(key) || part.substr(key.size()).empty() || part[key.size()] != ':') {
    throw ParseError("expected '" + std::string(key) + ":' in '" + std::string(part) + "'");
  }
  const std::string_view body = trim(part.substr(key.size() + 1));
  if (body.empty()) return {};
  return split(body, ';');
}

std::string join(const std::vector<Expr>& exprs) {
  std::string out;
  for (std::size_t c = 0; c < exprs.size(); ++c) {
    if (c) out += "; ";
    out += exprs[c].to_string();
  }
  return out;
}

BagMode parse_mode(std::string_view s) {
  if (s == "plain") return BagMode::plain;
  if (s == "subgraph") return BagMode::subgraph;
  if (s == "pair") return BagMode::pair;
  throw ParseError("unknown bag mode '" + std::string(s) + "'");
}

std::string aggregation_line(std::string_view stage, const Aggregation& a) {
  std::string out(stage);
  out += " terms: " + join(a.terms) + " | outputs: ";
  for (std::size_t c = 0; c < a.outputs.size(); ++c) {
    if (c) out += "; ";
    out += a.outputs[c].expr.to_string();
    if (a.outputs[c].divisor != 1) out += " / " + std::to_string(a.outputs[c].divisor);
  }
  return out;
}

Aggregation parse_aggregation(std::string_view rest) {
  const auto halves = split(rest, '|');
  if (halves.size() != 2) throw ParseError("readout line needs 'terms: ... | outputs: ...'");
  Aggregation a;
  for (std::string_view t : keyed_list(halves[0], "terms")) a.terms.push_back(Expr::parse(t));
  for (std::string_view o : keyed_list(halves[1], "outputs")) {
    Aggregation::Output out{Expr(0), 1};
    const std::size_t slash = o.find('/');
    if (slash == std::string_view::npos) {
      out.expr = Expr::parse(o);
    } else {
      out.expr = Expr::parse(o.substr(0, slash));
      const std::string_view d = trim(o.substr(slash + 1));
      Count v = 0;
      const auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
      if (ec != std::errc() || p != d.data() + d.size() || v <= 0) {
        throw ParseError("invalid divisor '" + std::string(d) + "'");
      }
      out.divisor = v;
    }
    a.outputs.push_back(std::move(out));
  }
  return a;
}

}  // namespace

std::string MPProgram::to_text() const {
  std::string out = "program " + (name.empty() ? std::string("anonymous") : name) +
                    " mode=" + std::string(subcount::to_string(mode)) + "\n";
  for (const Layer& l : layers) {
    out += "layer messages: " + join(l.messages) + " | updates: " + join(l.updates) + "\n";
  }
  return out;
}

MPProgram MPProgram::parse(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty program text");
  MPProgram prog;
  {
    std::istringstream header{std::string(lines[0])};
    std::string kw, name, mode;
    header >> kw >> name >> mode;
    if (kw != "program" || name.empty() || !mode.starts_with("mode=")) {
      throw ParseError("expected 'program <name> mode=<mode>'");
    }
    prog.name = name;
    prog.mode = parse_mode(std::string_view(mode).substr(5));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.starts_with("layer ")) throw ParseError("expected 'layer' in '" + std::string(line) + "'");
    const auto halves = split(line.substr(6), '|');
    if (halves.size() != 2) throw ParseError("layer line needs 'messages: ... | updates: ...'");
    Layer layer;
    for (std::string_view e : keyed_list(halves[0], "messages")) layer.messages.push_back(Expr::parse(e));
    for (std::string_view e : keyed_list(halves[1], "updates")) layer.updates.push_back(Expr::parse(e));
    prog.layers.push_back(std::move(layer));
  }
  return prog;
}

std::string ReadoutPlan::to_text() const {
  std::string out;
  if (edge) out += aggregation_line("edge", *edge) + "\n";
  out += aggregation_line("node", node) + "\n";
  if (graph) out += aggregation_line("graph", *graph) + "\n";
  return out;
}

ReadoutPlan ReadoutPlan::parse(std::string_view text) {
  ReadoutPlan plan;
  bool have_node = false;
  for (std::string_view line : lines_of(text)) {
    const std::size_t space = line.find(' ');
    const std::string_view stage = line.substr(0, space);
    const std::string_view rest = space == line.npos ? std::string_view{} : line.substr(space + 1);
    if (stage == "edge" && !plan.edge && !have_node) {
      plan.edge = parse_aggregation(rest);
    } else if (stage == "node" && !have_node) {
      plan.node = parse_aggregation(rest);
      have_node = true;
    } else if (stage == "graph" && have_node && !plan.graph) {
      plan.graph = parse_aggregation(rest);
    } else {
      throw ParseError("unexpected readout line '" + std::string(line) + "'");
    }
  }
  if (!have_node) throw ParseError("readout plan needs a 'node' line");
  return plan;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Scope {
  std::string where;
  std::size_t self_width = 0;
  std::optional<std::size_t> nbr_width;  // messages only
  std::optional<std::size_t> agg_width;
  bool node_refs = false;  // labels, attributes
  bool nbr_refs = false;   // neighbor labels, attributes, edge label
};

struct Requirements {
  std::uint32_t labels = 0;
  std::size_t attr_width = 0;
};

void check(const Expr& e, const Scope& s, Requirements& req) {
  using Op = Expr::Op;
  const auto idx = static_cast<std::size_t>(e.value());
  auto bad = [&](const std::string& what) {
    throw ProgramError("width mismatch in " + s.where + ": '" + e.to_string() + "' " + what);
  };
  switch (e.op()) {
    case Op::self:
      if (idx >= s.self_width) bad("exceeds state width " + std::to_string(s.self_width));
      break;
    case Op::nbr:
      if (!s.nbr_width) bad("is only valid in messages");
      if (idx >= *s.nbr_width) bad("exceeds state width " + std::to_string(*s.nbr_width));
      break;
    case Op::agg:
      if (!s.agg_width) bad("is not valid here");
      if (idx >= *s.agg_width) bad("exceeds aggregate width " + std::to_string(*s.agg_width));
      break;
    case Op::self_label:
      if (!s.node_refs) bad("cannot read node labels here");
      req.labels |= 1U << idx;
      break;
    case Op::nbr_label:
      if (!s.nbr_refs) bad("cannot read neighbor labels here");
      req.labels |= 1U << idx;
      break;
    case Op::self_attr:
      if (!s.node_refs) bad("cannot read node attributes here");
      req.attr_width = std::max(req.attr_width, idx + 1);
      break;
    case Op::nbr_attr:
    case Op::edge:
      if (!s.nbr_refs) bad("is only valid in messages");
      if (e.op() == Op::nbr_attr) req.attr_width = std::max(req.attr_width, idx + 1);
      break;
    default: break;
  }
  for (const Expr& c : e.children()) check(c, s, req);
}

Requirements check_program(const MPProgram& prog) {
  Requirements req;
  std::size_t width = 0;
  for (std::size_t t = 0; t < prog.layers.size(); ++t) {
    const Layer& layer = prog.layers[t];
    const std::string where = "layer " + std::to_string(t + 1);
    for (const Expr& m : layer.messages) {
      check(m, {where + " message", width, width, std::nullopt, true, true}, req);
    }
    for (const Expr& u : layer.updates) {
      check(u, {where + " update", width, std::nullopt, layer.messages.size(), true, false}, req);
    }
    width = layer.updates.size();
  }
  return req;
}

void check_aggregation(const Aggregation& a, const std::string& stage, std::size_t input_width, bool node_refs,
                       Requirements& req) {
  for (const Expr& t : a.terms) {
    check(t, {stage + " readout term", input_width, std::nullopt, std::nullopt, node_refs, false}, req);
  }
  for (const auto& o : a.outputs) {
    check(o.expr, {stage + " readout output", 0, std::nullopt, a.terms.size(), false, false}, req);
    if (o.divisor <= 0) throw ProgramError(stage + " readout divisor must be positive");
  }
}

Requirements check_all(const MPProgram& prog, const ReadoutPlan& plan) {
  Requirements req = check_program(prog);
  if (prog.mode == BagMode::pair) {
    if (!plan.edge) throw ProgramError("mode mismatch: pair programs need an edge readout");
    check_aggregation(*plan.edge, "edge", prog.output_width(), true, req);
    check_aggregation(plan.node, "node", plan.edge->outputs.size(), false, req);
  } else {
    if (plan.edge) throw ProgramError("mode mismatch: edge readout requires pair mode");
    check_aggregation(plan.node, "node", prog.output_width(), true, req);
  }
  if (plan.graph) check_aggregation(*plan.graph, "graph", plan.node.outputs.size(), false, req);
  return req;
}

}  // namespace

void validate(const MPProgram& prog) { check_program(prog); }
void validate(const MPProgram& prog, const ReadoutPlan& plan) { check_all(prog, plan); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct CompiledLayer {
  std::vector<CompiledExpr> messages;
  std::vector<CompiledExpr> updates;
};

struct CompiledAggregation {
  std::vector<CompiledExpr> terms;
  std::vector<std::pair<CompiledExpr, Count>> outputs;

  explicit CompiledAggregation(const Aggregation& a) {
    for (const Expr& t : a.terms) terms.emplace_back(t);
    for (const auto& o : a.outputs) outputs.emplace_back(CompiledExpr(o.expr), o.divisor);
  }

  void accumulate(const EvalContext& ctx, std::vector<Count>& sums) const {
    for (std::size_t c = 0; c < terms.size(); ++c) sums[c] = checked_add(sums[c], terms[c].eval(ctx));
  }

  std::vector<Count> finish(const std::vector<Count>& sums) const {
    EvalContext ctx;
    ctx.agg = sums.data();
    std::vector<Count> out;
    out.reserve(outputs.size());
    for (const auto& [expr, divisor] : outputs) out.push_back(exact_div(expr.eval(ctx), divisor, "readout"));
    return out;
  }
};

struct Compiled {
  std::vector<CompiledLayer> layers;
  Requirements req;

  Compiled(const MPProgram& prog, Requirements r) : req(r) {
    for (const Layer& l : prog.layers) {
      CompiledLayer cl;
      for (const Expr& e : l.messages) cl.messages.emplace_back(e);
      for (const Expr& e : l.updates) cl.updates.emplace_back(e);
      layers.push_back(std::move(cl));
    }
  }
};

void check_subgraph(const RootedSubgraph& sub, const Requirements& req, const Graph* parent) {
  const std::uint32_t missing = req.labels & ~sub.available;
  if (missing != 0) {
    for (std::size_t k = 0; k < kLabelKinds; ++k) {
      if ((missing >> k) & 1U) {
        throw ProgramError("missing label: program reads '" + std::string(to_string(static_cast<LabelKind>(k))) +
                           "' but the subgraph does not provide it");
      }
    }
  }
  if (req.attr_width == 0 || !sub.graph) return;
  if (parent == nullptr) throw ProgramError("program reads node attributes but no parent graph was given");
  for (NodeId v : sub.graph->nodes) {
    if (parent->node_label(v).size() < req.attr_width) {
      throw ProgramError("width mismatch: program reads node attribute " + std::to_string(req.attr_width - 1) +
                         " but node " + std::to_string(v) + " has " +
                         std::to_string(parent->node_label(v).size()));
    }
  }
}

/// Per-node read-only context pieces shared by program and readout.
struct NodeView {
  const RootedSubgraph& sub;
  const Graph* parent;
  bool attrs;

  const std::int64_t* labels(LocalIndex k) const { return sub.table.empty() ? nullptr : sub.label_row(k); }
  std::span<const std::int64_t> attr(LocalIndex k) const {
    return attrs ? parent->node_label(sub.graph->nodes[k]) : std::span<const std::int64_t>{};
  }
};

StateTensor run_compiled(const RootedSubgraph& sub, const Compiled& prog, const Graph* parent) {
  check_subgraph(sub, prog.req, parent);
  const NodeView view{sub, parent, prog.req.attr_width > 0};
  const std::size_t n = sub.size();
  StateTensor st;
  std::vector<Count> h;
  std::size_t width = 0;
  std::vector<Count> agg;
  for (const CompiledLayer& layer : prog.layers) {
    const std::size_t m = layer.messages.size();
    agg.assign(n * m, 0);
    if (m > 0) {
      const LocalGraph& lg = *sub.graph;
      for (LocalIndex k = 0; k < n; ++k) {
        EvalContext ctx;
        ctx.self = h.data() + k * width;
        ctx.self_labels = view.labels(k);
        ctx.self_attrs = view.attr(k);
        Count* out = agg.data() + k * m;
        for (std::uint32_t e = lg.offsets[k]; e < lg.offsets[k + 1]; ++e) {
          const LocalIndex l = lg.targets[e];
          ctx.nbr = h.data() + l * width;
          ctx.nbr_labels = view.labels(l);
          ctx.nbr_attrs = view.attr(l);
          ctx.edge = lg.edge_labels.empty() ? 0 : lg.edge_labels[e];
          for (std::size_t c = 0; c < m; ++c) out[c] = checked_add(out[c], layer.messages[c].eval(ctx));
        }
      }
    }
    const std::size_t next_width = layer.updates.size();
    std::vector<Count> next(n * next_width);
    for (LocalIndex k = 0; k < n; ++k) {
      EvalContext ctx;
      ctx.self = h.data() + k * width;
      ctx.agg = agg.data() + k * m;
      ctx.self_labels = view.labels(k);
      ctx.self_attrs = view.attr(k);
      for (std::size_t c = 0; c < next_width; ++c) next[k * next_width + c] = layer.updates[c].eval(ctx);
    }
    h = std::move(next);
    width = next_width;
    ++st.layer;
  }
  st.width = width;
  st.values = std::move(h);
  return st;
}

std::vector<Count> reduce_nodes(const RootedSubgraph& sub, const StateTensor& st, const CompiledAggregation& agg,
                                const Graph* parent, bool attrs, std::optional<LocalIndex> only = std::nullopt) {
  const NodeView view{sub, parent, attrs};
  std::vector<Count> sums(agg.terms.size(), 0);
  auto visit = [&](LocalIndex k) {
    EvalContext ctx;
    ctx.self = st.values.data() + k * st.width;
    ctx.self_labels = view.labels(k);
    ctx.self_attrs = view.attr(k);
    agg.accumulate(ctx, sums);
  };
  if (only) {
    visit(*only);
  } else {
    for (LocalIndex k = 0; k < sub.size(); ++k) visit(k);
  }
  return agg.finish(sums);
}

std::vector<Count> reduce_rows(const std::vector<const std::vector<Count>*>& rows, const CompiledAggregation& agg) {
  std::vector<Count> sums(agg.terms.size(), 0);
  for (const auto* row : rows) {
    EvalContext ctx;
    ctx.self = row->data();
    agg.accumulate(ctx, sums);
  }
  return agg.finish(sums);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

StateTensor run_program(const RootedSubgraph& sub, const MPProgram& prog, const Graph* parent) {
  return run_compiled(sub, Compiled(prog, check_program(prog)), parent);
}

BagResult run_bag(const SubgraphBag& bag, const MPProgram& prog, const ReadoutPlan& plan, const RunOptions& options) {
  if (bag.mode != prog.mode) {
    throw ProgramError("mode mismatch: program '" + prog.name + "' expects a " + std::string(to_string(prog.mode)) +
                       " bag, got " + std::string(to_string(bag.mode)));
  }
  const Requirements req = check_all(prog, plan);
  const Compiled compiled(prog, req);
  const bool attrs = req.attr_width > 0;
  const CompiledAggregation node_agg(plan.node);
  const std::optional<CompiledAggregation> edge_agg =
      plan.edge ? std::optional<CompiledAggregation>(std::in_place, *plan.edge) : std::nullopt;

  const std::size_t n = bag.parent_nodes;
  BagResult result;
  result.node.assign(n, {});
  std::mutex times_mutex;

  // First stage: one result row per item (pair / subgraph) or per node (plain).
  std::vector<std::vector<Count>> first(bag.mode == BagMode::plain ? n : bag.items.size());

  parallel_for(bag.items.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    PhaseTimes local;
    for (std::size_t it = begin; it < end; ++it) {
      const RootedSubgraph& sub = bag.items[it];
      auto t0 = Clock::now();
      const StateTensor st = run_compiled(sub, compiled, options.parent);
      local.message_passing += seconds_since(t0);
      t0 = Clock::now();
      if (bag.mode == BagMode::plain) {
        for (LocalIndex k = 0; k < sub.size(); ++k) {
          first[sub.graph->nodes[k]] = reduce_nodes(sub, st, node_agg, options.parent, attrs, k);
        }
      } else {
        first[it] = reduce_nodes(sub, st, edge_agg ? *edge_agg : node_agg, options.parent, attrs);
      }
      local.readout += seconds_since(t0);
    }
    if (options.times) {
      std::lock_guard lock(times_mutex);
      options.times->message_passing += local.message_passing;
      options.times->readout += local.readout;
    }
  });

  const auto t0 = Clock::now();
  switch (bag.mode) {
    case BagMode::plain: result.node = std::move(first); break;
    case BagMode::subgraph:
      for (std::size_t it = 0; it < bag.items.size(); ++it) result.node[bag.items[it].root] = std::move(first[it]);
      break;
    case BagMode::pair: {
      std::vector<std::vector<const std::vector<Count>*>> per_root(n);
      for (std::size_t it = 0; it < bag.items.size(); ++it) per_root[bag.items[it].root].push_back(&first[it]);
      for (std::size_t i = 0; i < n; ++i) result.node[i] = reduce_rows(per_root[i], node_agg);
      result.edge.reserve(bag.items.size());
      for (std::size_t it = 0; it < bag.items.size(); ++it) {
        result.edge.push_back({bag.items[it].root, *bag.items[it].branching, std::move(first[it])});
      }
      break;
    }
  }
  // Nodes without any item (possible only for an empty plain bag) still get
  // the readout of an empty sum.
  if (bag.mode != BagMode::pair) {
    for (auto& row : result.node) {
      if (row.empty() && !plan.node.outputs.empty()) row = node_agg.finish(std::vector<Count>(node_agg.terms.size(), 0));
    }
  }
  if (plan.graph) {
    const CompiledAggregation graph_agg(*plan.graph);
    std::vector<const std::vector<Count>*> rows;
    rows.reserve(n);
    for (const auto& row : result.node) rows.push_back(&row);
    result.graph = reduce_rows(rows, graph_agg);
  }
  if (options.times) options.times->readout += seconds_since(t0);
  return result;
}

}  // namespace subcount
