//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <chrono>

#include "subcount/counting.hpp"
#include "subcount/error.hpp"

namespace subcount {

namespace {

SubgraphBag make_bag(const Graph& g, Substructure kind, BagMode mode, unsigned hops, unsigned threads) {
  switch (mode) {
    case BagMode::plain: return extract_bag_plain(g);
    case BagMode::subgraph:
      return extract_bag_subgraph_mpnn(
          g, kind == Substructure::walk ? ExtractionPolicy::full() : ExtractionPolicy::ego(hops), Labeling::identity,
          threads);
    case BagMode::pair: return extract_bag_i2(g, hops, Labeling::identity, threads);
  }
  throw InternalError("unknown bag mode");
}

CountOptions hops_only(unsigned hops) {
  CountOptions options;
  options.hops = hops;
  return options;
}

}  // namespace

CountReport count_substructure(const Graph& g, Substructure kind, const CountOptions& options) {
  const KindInfo info = kind_info(kind, options.walk_length);
  CountReport report;
  report.kind = kind;
  report.walk_length = kind == Substructure::walk ? options.walk_length : 0;
  report.hops = options.hops.value_or(info.default_hops);
  if (info.mode == BagMode::plain || kind == Substructure::walk) {
    report.hops = 0;
  } else if (report.hops < info.min_hops) {
    throw PreconditionError(std::string(to_string(kind)) + " needs subgraph height of at least " +
                            std::to_string(info.min_hops) + " hops, got " + std::to_string(report.hops));
  }
  const CountingProgram prog = counting_program(kind, options.walk_length);

  const auto t0 = std::chrono::steady_clock::now();
  const SubgraphBag bag = make_bag(g, kind, info.mode, report.hops, options.threads);
  report.times.extraction = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  BagResult result = run_bag(bag, prog.program, prog.plan, {options.threads, &g, &report.times});

  report.pattern_names = pattern_names(kind);
  report.node.reserve(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const auto& row = result.node[i];
    if (std::any_of(row.begin(), row.end(), [](Count c) { return c < 0; })) {
      throw InternalError(std::string(to_string(kind)) + ": negative count at node " + std::to_string(i));
    }
    report.node.push_back(row.at(0));
    if (!report.pattern_names.empty()) report.patterns.emplace_back(row.begin() + 1, row.end());
  }
  report.graph = result.graph ? result.graph->at(0) : 0;
  return report;
}

CountReport count_path2_node(const Graph& g) { return count_substructure(g, Substructure::path2); }
CountReport count_path3_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::path3, hops_only(hops));
}
CountReport count_path4_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::path4, hops_only(hops));
}
CountReport count_cycle3_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::cycle3, hops_only(hops));
}
CountReport count_cycle4_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::cycle4, hops_only(hops));
}
CountReport count_cycle5_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::cycle5, hops_only(hops));
}
CountReport count_cycle6_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::cycle6, hops_only(hops));
}
CountReport count_clique4_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::clique4, hops_only(hops));
}
CountReport count_chordal_cycle_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::chordal_cycle, hops_only(hops));
}
CountReport count_tailed_triangle_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::tailed_triangle, hops_only(hops));
}
CountReport count_triangle_rectangle_node(const Graph& g, unsigned hops) {
  return count_substructure(g, Substructure::triangle_rectangle, hops_only(hops));
}

std::vector<Path4Entry> count_path4_edge(const Graph& g, unsigned hops) {
  const KindInfo info = kind_info(Substructure::path4);
  if (hops < info.min_hops) {
    throw PreconditionError("path4 table needs subgraph height of at least " + std::to_string(info.min_hops) +
                            " hops, got " + std::to_string(hops));
  }
  const MPProgram prog = counting_program(Substructure::path4).program;
  const SubgraphBag bag = extract_bag_i2(g, hops, Labeling::identity);
  std::vector<Path4Entry> table;
  for (const RootedSubgraph& sub : bag.items) {
    const StateTensor st = run_program(sub, prog, &g);
    for (LocalIndex k = 0; k < sub.size(); ++k) {
      const Count p = st.row(k)[2];
      if (p != 0) table.push_back({sub.root, *sub.branching, sub.graph->nodes[k], p});
    }
  }
  return table;
}

Count count_walks(const Graph& g, unsigned length, NodeId i, NodeId j) {
  if (i >= g.num_nodes() || j >= g.num_nodes()) {
    throw ValidationError("walk endpoints out of range for a graph with " + std::to_string(g.num_nodes()) +
                          " nodes");
  }
  const MPProgram prog = counting_program(Substructure::walk, length).program;
  const RootedSubgraph sub = extract_rooted(g, i, ExtractionPolicy::full(), Labeling::identity);
  const StateTensor st = run_program(sub, prog, &g);
  return st.row(*sub.graph->local_index(j))[0];
}

CorpusStats corpus_cycle_stats(const std::vector<Graph>& graphs, std::string name, unsigned threads) {
  CorpusStats stats;
  stats.name = std::move(name);
  stats.graphs = graphs.size();
  constexpr Substructure kinds[] = {Substructure::cycle3, Substructure::cycle4, Substructure::cycle5,
                                    Substructure::cycle6};
  std::array<Count, 4> totals{};
  CountOptions options;
  options.threads = threads;
  for (const Graph& g : graphs) {
    for (std::size_t c = 0; c < 4; ++c) {
      totals[c] = checked_add(totals[c], count_substructure(g, kinds[c], options).graph);
    }
  }
  for (std::size_t c = 0; c < 4; ++c) {
    stats.mean_cycles[c] = graphs.empty() ? 0.0 : static_cast<double>(totals[c]) / static_cast<double>(graphs.size());
  }
  return stats;
}

CorpusStats corpus_cycle_stats(const std::vector<std::filesystem::path>& paths, GraphFormat format, std::string name,
                               unsigned threads) {
  std::vector<Graph> graphs;
  std::vector<std::string> errors;
  for (const auto& path : paths) {
    try {
      auto loaded = load_graphs(path, format);
      std::move(loaded.begin(), loaded.end(), std::back_inserter(graphs));
    } catch (const Error& e) {
      errors.push_back(path.string() + ": " + e.what());
    }
  }
  CorpusStats stats = corpus_cycle_stats(graphs, std::move(name), threads);
  stats.errors = std::move(errors);
  return stats;
}

}  // namespace subcount
