//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "subcount/cli.hpp"
#include "subcount/error.hpp"
#include "subcount/generators.hpp"
#include "subcount/io.hpp"
#include "subcount/oracle.hpp"
#include "subcount/refinement.hpp"

namespace subcount::cli {

namespace {

constexpr std::string_view kSchema = "subcount.report/1";

// Oracle-only kinds: cycles 3..8 and paths 2..6 of any length in range.
struct OracleKind {
  std::optional<Substructure> kind;
  unsigned cycle = 0;
  unsigned path = 0;
  unsigned walk = 0;
};

OracleKind parse_oracle_kind(const std::string& name) {
  auto suffix = [&](std::string_view prefix) -> std::optional<unsigned> {
    if (!std::string_view(name).starts_with(prefix)) return std::nullopt;
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3) {
      return std::nullopt;
    }
    return static_cast<unsigned>(std::stoul(digits));
  };
  OracleKind k;
  if (auto c = suffix("cycle")) {
    if (*c < 3 || *c > 8) throw ParseError("oracle cycle length must be in 3..8, got " + std::to_string(*c));
    k.cycle = *c;
    return k;
  }
  if (auto p = suffix("path"); p && name.find('_') == std::string::npos) {
    if (*p < 2 || *p > 6) throw ParseError("oracle path length must be in 2..6, got " + std::to_string(*p));
    k.path = *p;
    return k;
  }
  unsigned walk = 0;
  k.kind = parse_substructure(name, &walk);
  k.walk = walk;
  return k;
}

std::string format_value_row(const std::string& first, const std::vector<Count>& values) {
  std::string row = first;
  for (Count v : values) row += "," + std::to_string(v);
  return row;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ParseError("failed writing '" + path + "'");
}

struct InputFlags {
  std::string input;
  std::string format = "edgelist";
  std::string out;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input,-i", f.input, "Graph file")->required();
  cmd->add_option("--format", f.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--out,-o", f.out, "Write the report here instead of stdout");
}

// ---------------------------------------------------------------------------

struct CountFlags {
  InputFlags io;
  std::string substructure;
  std::string level = "node";
  std::optional<unsigned> hops;
  bool verbose = false;
  unsigned threads = 0;
};

int cmd_count(const CountFlags& f, std::ostream& out) {
  const Graph g = load_graph(f.io.input, parse_format(f.io.format));
  unsigned walk = 4;
  const Substructure kind = parse_substructure(f.substructure, &walk);
  CountOptions options;
  options.hops = f.hops;
  options.walk_length = walk;
  options.threads = f.threads;
  const CountReport report = count_substructure(g, kind, options);
  write_output(format_report(report, f.substructure, f.level == "graph", f.verbose), f.io.out, out);
  return kOk;
}

struct OracleFlags {
  InputFlags io;
  std::string substructure;
  std::string level = "node";
  bool verbose = false;
  unsigned threads = 0;
  double budget = 1e9;
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  const OracleKind kind = parse_oracle_kind(f.substructure);
  const Graph g = load_graph(f.io.input, parse_format(f.io.format));
  OracleOptions options;
  options.threads = f.threads;
  options.budget = f.budget;
  CountReport report;
  if (kind.cycle) {
    CycleCounts c = oracle_cycles(g, kind.cycle, options);
    report.node = std::move(c.node);
    report.graph = c.graph;
    if (kind.cycle == 6) {
      report.pattern_names = pattern_names(Substructure::cycle6);
      for (const auto& row : oracle_cycle6_patterns(g)) report.patterns.emplace_back(row.begin(), row.end());
    }
  } else if (kind.path) {
    PathCounts c = oracle_paths(g, kind.path, options);
    report.node = std::move(c.endpoint);
    report.graph = c.graph;
  } else {
    report = oracle_count(g, *kind.kind, kind.walk, options);
  }
  write_output(format_report(report, f.substructure, f.level == "graph", f.verbose), f.io.out, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct DistinguishFlags {
  std::vector<std::string> files;
  std::string corpus;
  std::string format = "edgelist";
  std::string method = "i2_wl";
  std::string policy = "ego";
  std::string labeling = "identity";
  std::optional<unsigned> hops;
  bool exact = false;
  unsigned threads = 0;
};

int cmd_distinguish(const DistinguishFlags& f, std::ostream& out) {
  const RefinementMethod method = parse_method(f.method);
  RefinementOptions options;
  options.threads = f.threads;
  options.labeling = parse_labeling(f.labeling);
  options.policy = parse_policy(f.policy, f.hops.value_or(2));
  options.hops = f.hops.value_or(1);

  if (!f.corpus.empty()) {
    if (!f.files.empty()) throw ParseError("--corpus takes no positional graph files");
    const std::vector<Graph> graphs = load_graphs(f.corpus, GraphFormat::graph6);
    std::size_t pairs = 0, separated = 0;
    std::vector<Hash128> digests;
    if (!f.exact) {
      for (const Graph& g : graphs) digests.push_back(fingerprint(g, method, options).digest);
    }
    out << "a,b,verdict\n";
    for (std::size_t a = 0; a < graphs.size(); ++a) {
      for (std::size_t b = a + 1; b < graphs.size(); ++b) {
        const Verdict v = f.exact ? distinguish(graphs[a], graphs[b], method, options, true)
                                  : (digests[a] == digests[b] ? Verdict::not_distinguished : Verdict::distinguished);
        ++pairs;
        if (v == Verdict::distinguished) ++separated;
        out << a << ',' << b << ',' << to_string(v) << '\n';
      }
    }
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.1f", pairs == 0 ? 0.0 : 100.0 * static_cast<double>(separated) / pairs);
    out << "# method=" << f.method << " graphs=" << graphs.size() << " pairs=" << pairs
        << " distinguished=" << separated << " rate=" << rate << "%\n";
    return kOk;
  }
  if (f.files.size() != 2) throw ParseError("distinguish needs exactly two graph files (or --corpus)");
  const GraphFormat format = parse_format(f.format);
  const Graph a = load_graph(f.files[0], format);
  const Graph b = load_graph(f.files[1], format);
  out << to_string(distinguish(a, b, method, options, f.exact)) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct GenFlags {
  std::string kind;
  std::size_t length = 6;
  std::string variant;
  std::size_t n = 10;
  double p = 0.3;
  std::size_t degree = 4;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  Graph g;
  auto pick = [&](std::pair<Graph, Graph> pair, std::string_view first, std::string_view second) {
    const std::string v = f.variant.empty() ? std::string(first) : f.variant;
    if (v == first) return std::move(pair.first);
    if (v == second) return std::move(pair.second);
    throw ParseError("variant must be '" + std::string(first) + "' or '" + std::string(second) + "'");
  };
  if (f.kind == "cycle") {
    g = gen_cycle(f.length);
  } else if (f.kind == "cycle_pair") {
    g = pick(gen_cycle_pair(f.length), "split", "single");
  } else if (f.kind == "coned") {
    g = pick(gen_coned_cycles(f.length), "joined", "split");
  } else if (f.kind == "rook") {
    g = gen_rook4x4();
  } else if (f.kind == "shrikhande") {
    g = gen_shrikhande();
  } else if (f.kind == "random") {
    g = gen_random(f.n, f.p, f.seed);
  } else if (f.kind == "regular") {
    g = gen_random_regular(f.n, f.degree, f.seed);
  } else if (f.kind == "path") {
    g = gen_path(f.n);
  } else if (f.kind == "star") {
    g = gen_star(f.n);
  } else if (f.kind == "complete") {
    g = gen_complete(f.n);
  } else if (f.kind == "petersen") {
    g = gen_petersen();
  } else if (f.kind == "paw") {
    g = gen_paw();
  } else if (f.kind == "diamond") {
    g = gen_diamond();
  } else {
    throw ParseError("unknown generator '" + f.kind + "'");
  }
  write_output(to_edgelist(g), f.out, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct StatsFlags {
  std::vector<std::string> paths;
  std::string format = "edgelist";
  unsigned threads = 0;
};

int cmd_stats(const StatsFlags& f, std::ostream& out, std::ostream& err) {
  const GraphFormat format = parse_format(f.format);
  std::vector<std::pair<std::string, std::vector<std::filesystem::path>>> corpora;
  std::vector<std::filesystem::path> loose;
  for (const auto& p : f.paths) {
    std::error_code ec;
    if (std::filesystem::is_directory(p, ec)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(p)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      corpora.emplace_back(std::filesystem::path(p).filename().string(), std::move(files));
    } else {
      loose.emplace_back(p);
    }
  }
  if (!loose.empty()) corpora.emplace_back("files", std::move(loose));

  out << "corpus,graphs,cycle3,cycle4,cycle5,cycle6\n";
  for (const auto& [name, files] : corpora) {
    const CorpusStats s = corpus_cycle_stats(files, format, name, f.threads);
    for (const auto& e : s.errors) err << "error: " << e << '\n';
    if (s.graphs == 0) continue;
    char buf[160];
    std::snprintf(buf, sizeof buf, ",%zu,%.4f,%.4f,%.4f,%.4f\n", s.graphs, s.mean_cycles[0], s.mean_cycles[1],
                  s.mean_cycles[2], s.mean_cycles[3]);
    out << s.name << buf;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct BenchFlags {
  std::vector<std::size_t> sizes{1000, 2000, 4000};
  std::size_t degree = 4;
  std::string substructure = "cycle6";
  unsigned reps = 3;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  unsigned walk = 4;
  const Substructure kind = parse_substructure(f.substructure, &walk);
  CountOptions options;
  options.threads = f.threads;
  options.walk_length = walk;
  out << "# substructure=" << f.substructure << " degree=" << f.degree << " reps=" << f.reps << '\n';
  out << "n,edges,extraction_s,message_passing_s,readout_s,total_s,ratio\n";
  double previous = 0;
  for (std::size_t n : f.sizes) {
    const Graph g = gen_random_regular(n, f.degree, f.seed + n);
    PhaseTimes best;
    double best_total = -1;
    for (unsigned r = 0; r < std::max(1U, f.reps); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const CountReport report = count_substructure(g, kind, options);
      const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (best_total < 0 || total < best_total) {
        best_total = total;
        best = report.times;
      }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.6f,%.6f,%.6f,%.6f,", n, g.num_edges(), best.extraction,
                  best.message_passing, best.readout, best_total);
    out << buf;
    if (previous > 0 && best_total > 0) {
      std::snprintf(buf, sizeof buf, "%.3f", best_total / previous);
      out << buf;
    }
    out << '\n';
    previous = best_total;
  }
  return kOk;
}

template <typename Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

std::string format_report(const CountReport& report, std::string_view kind_name, bool graph_level, bool verbose) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " substructure=" << kind_name << " level=" << (graph_level ? "graph" : "node")
    << '\n';
  const bool patterns = verbose && !report.pattern_names.empty() && !graph_level;
  if (graph_level) {
    s << kind_name << '\n' << report.graph << '\n';
    return s.str();
  }
  s << "node," << kind_name;
  if (patterns) {
    for (const auto& name : report.pattern_names) s << ',' << name;
  }
  s << '\n';
  for (std::size_t i = 0; i < report.node.size(); ++i) {
    std::vector<Count> values{report.node[i]};
    if (patterns) values.insert(values.end(), report.patterns[i].begin(), report.patterns[i].end());
    s << format_value_row(std::to_string(i), values) << '\n';
  }
  return s.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact substructure counting with message-passing programs"};
  app.name("subcount");
  app.require_subcommand(1);

  CountFlags count;
  auto* c = app.add_subcommand("count", "Count a substructure with its message-passing program");
  add_input_flags(c, count.io);
  c->add_option("--substructure,-s", count.substructure, "Substructure kind, e.g. cycle6 or walk4")->required();
  c->add_option("--level", count.level)->check(CLI::IsMember({"node", "graph"}));
  c->add_option("--hops", count.hops, "Subgraph height (default depends on the substructure)");
  c->add_flag("--verbose,-v", count.verbose, "Add pattern columns");
  c->add_option("--threads", count.threads, "0 = all cores");

  OracleFlags oracle;
  auto* o = app.add_subcommand("oracle", "Count a substructure by exhaustive enumeration");
  add_input_flags(o, oracle.io);
  o->add_option("--substructure,-s", oracle.substructure, "cycle3..cycle8, path2..path6, graphlets, walkL")
      ->required();
  o->add_option("--level", oracle.level)->check(CLI::IsMember({"node", "graph"}));
  o->add_flag("--verbose,-v", oracle.verbose, "Add pattern columns");
  o->add_option("--threads", oracle.threads, "0 = all cores");
  o->add_option("--budget", oracle.budget, "Refuse when N * maxdeg^L exceeds this");

  DistinguishFlags dist;
  auto* d = app.add_subcommand("distinguish", "Compare two graphs by color refinement");
  d->add_option("files", dist.files, "Two graph files");
  d->add_option("--corpus", dist.corpus, "graph6 file; compare all pairs");
  d->add_option("--format", dist.format)->check(CLI::IsMember({"edgelist", "graph6"}));
  d->add_option("--method,-m", dist.method)->check(CLI::IsMember({"wl1", "subgraph_wl", "i2_wl"}));
  d->add_option("--policy", dist.policy, "subgraph_wl: ego, node_deletion or full");
  d->add_option("--labeling", dist.labeling, "subgraph_wl: identity or spd");
  d->add_option("--hops", dist.hops, "ego height (subgraph_wl default 2, i2_wl default 1)");
  d->add_flag("--exact-compare", dist.exact, "Compare full histograms instead of digests");
  d->add_option("--threads", dist.threads, "0 = all cores");

  GenFlags gen;
  auto* gcmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gcmd->add_option("kind", gen.kind,
                   "cycle, cycle_pair, coned, rook, shrikhande, random, regular, path, star, complete, petersen, "
                   "paw, diamond")
      ->required();
  gcmd->add_option("--L", gen.length, "Cycle length");
  gcmd->add_option("--variant", gen.variant, "cycle_pair: split|single, coned: joined|split");
  gcmd->add_option("--n", gen.n, "Node count (path: nodes, star: leaves)");
  gcmd->add_option("--p", gen.p, "Edge probability");
  gcmd->add_option("--d", gen.degree, "Degree");
  gcmd->add_option("--seed", gen.seed);
  gcmd->add_option("--out,-o", gen.out);

  StatsFlags stats;
  auto* st = app.add_subcommand("stats", "Average 3- to 6-cycle counts per corpus");
  st->add_option("paths", stats.paths, "Directories (one corpus each) or graph files");
  st->add_option("--format", stats.format)->check(CLI::IsMember({"edgelist", "graph6"}));
  st->add_option("--threads", stats.threads, "0 = all cores");

  BenchFlags bench;
  auto* b = app.add_subcommand("bench", "Time a counting program on random regular graphs");
  b->add_option("--sizes", bench.sizes)->delimiter(',');
  b->add_option("--degree", bench.degree);
  b->add_option("--substructure,-s", bench.substructure);
  b->add_option("--reps", bench.reps);
  b->add_option("--seed", bench.seed);
  b->add_option("--threads", bench.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  return guarded(
      [&] {
        if (c->parsed()) return cmd_count(count, out);
        if (o->parsed()) return cmd_oracle(oracle, out);
        if (d->parsed()) return cmd_distinguish(dist, out);
        if (gcmd->parsed()) return cmd_gen(gen, out);
        if (st->parsed()) return cmd_stats(stats, out, err);
        return cmd_bench(bench, out);
      },
      err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"subcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace subcount::cli
