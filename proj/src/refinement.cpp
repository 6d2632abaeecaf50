//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/refinement.hpp"

#include <algorithm>
#include <cstdio>

#include "subcount/error.hpp"
#include "subcount/parallel.hpp"

namespace subcount {

std::string Hash128::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Hash128 HashColorer::color(std::span<const Hash128> signature) { return Hasher128().add(signature).digest(); }

Hash128 ExactColorer::color(std::span<const Hash128> signature) {
  std::lock_guard lock(mutex_);
  const auto [it, inserted] =
      ids_.try_emplace(std::vector<Hash128>(signature.begin(), signature.end()), ids_.size());
  return {0, it->second};
}

std::size_t ExactColorer::size() const {
  std::lock_guard lock(mutex_);
  return ids_.size();
}

std::string_view to_string(RefinementMethod method) {
  switch (method) {
    case RefinementMethod::wl1: return "wl1";
    case RefinementMethod::subgraph_wl: return "subgraph_wl";
    case RefinementMethod::i2_wl: return "i2_wl";
  }
  return "?";
}

RefinementMethod parse_method(std::string_view name) {
  if (name == "wl1") return RefinementMethod::wl1;
  if (name == "subgraph_wl") return RefinementMethod::subgraph_wl;
  if (name == "i2_wl") return RefinementMethod::i2_wl;
  throw ParseError("unknown refinement method '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::distinguished ? "distinguished" : "not_distinguished";
}

std::vector<std::pair<Hash128, std::size_t>> ColorPartition::histogram() const {
  std::vector<Hash128> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Hash128, std::size_t>> out;
  for (const Hash128& c : sorted) {
    if (out.empty() || out.back().first != c) {
      out.push_back({c, 1});
    } else {
      ++out.back().second;
    }
  }
  return out;
}

Hash128 ColorPartition::digest() const {
  std::vector<Hash128> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return Hasher128(0x5EED).add(std::span<const Hash128>(sorted)).digest();
}

namespace {

// Signature tags keep the different color kinds apart.
enum Tag : std::uint64_t { kInit = 1, kRound, kEdge, kSubgraph, kPair, kNode };

Hash128 tag(Tag t) { return {t, 0}; }
Hash128 word(std::int64_t v) { return {0, static_cast<std::uint64_t>(v)}; }

std::size_t distinct(std::vector<Hash128> colors) {
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

/// Adjacency view used by the refinement loop: CSR with optional edge labels.
struct Adjacency {
  std::span<const std::uint32_t> offsets32;
  std::span<const std::size_t> offsets64;
  std::span<const std::uint32_t> targets;
  std::span<const std::int64_t> edge_labels;

  std::size_t begin(std::size_t k) const { return offsets32.empty() ? offsets64[k] : offsets32[k]; }
  std::size_t end(std::size_t k) const { return offsets32.empty() ? offsets64[k + 1] : offsets32[k + 1]; }
};

/// Refines `colors` in place until the number of colors stops changing.
/// Returns the number of rounds run.
std::size_t refine_to_stability(const Adjacency& adj, std::vector<Hash128>& colors, Colorer& colorer) {
  const std::size_t n = colors.size();
  std::size_t count = distinct(colors);
  std::size_t rounds = 0;
  std::vector<Hash128> next(n);
  std::vector<Hash128> sig;
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) {
      sig.assign({tag(kRound), colors[k]});
      for (std::size_t e = adj.begin(k); e < adj.end(k); ++e) {
        const Hash128 c = colors[adj.targets[e]];
        if (adj.edge_labels.empty()) {
          sig.push_back(c);
        } else {
          const Hash128 edge_sig[] = {tag(kEdge), word(adj.edge_labels[e]), c};
          sig.push_back(colorer.color(edge_sig));
        }
      }
      std::sort(sig.begin() + 2, sig.end());
      next[k] = colorer.color(sig);
    }
    colors.swap(next);
    ++rounds;
    const std::size_t now = distinct(colors);
    if (now == count) return rounds;
    count = now;
  }
}

ColorPartition finish(std::vector<Hash128> colors, std::size_t rounds) {
  ColorPartition p;
  std::vector<Hash128> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  p.ids.reserve(colors.size());
  for (const Hash128& c : colors) {
    p.ids.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin()));
  }
  p.num_colors = sorted.size();
  p.colors = std::move(colors);
  p.rounds = rounds;
  return p;
}

Hash128 initial_color(const Graph& g, NodeId v, std::span<const std::int64_t> z, Colorer& colorer) {
  std::vector<Hash128> sig{tag(kInit), word(static_cast<std::int64_t>(z.size()))};
  for (std::int64_t x : z) sig.push_back(word(x));
  for (std::int64_t x : g.node_label(v)) sig.push_back(word(x));
  return colorer.color(sig);
}

// Stable color multiset of one labeled subgraph, folded into a single color.
Hash128 subgraph_color(const Graph& g, const RootedSubgraph& sub, Tag t, Colorer& colorer, std::size_t& rounds) {
  const LocalGraph& lg = *sub.graph;
  std::vector<Hash128> colors(lg.size());
  for (LocalIndex k = 0; k < lg.size(); ++k) colors[k] = initial_color(g, lg.nodes[k], sub.labels(k), colorer);
  rounds = refine_to_stability({lg.offsets, {}, lg.targets, lg.edge_labels}, colors, colorer);
  std::sort(colors.begin(), colors.end());
  colors.insert(colors.begin(), tag(t));
  return colorer.color(colors);
}

unsigned effective_threads(const RefinementOptions& options) {
  // Interned ids depend on insertion order, so exact coloring runs serially.
  return dynamic_cast<ExactColorer*>(options.colorer) ? 1U : options.threads;
}

}  // namespace

ColorPartition wl1(const Graph& g, const RefinementOptions& options) {
  HashColorer fallback;
  Colorer& colorer = options.colorer ? *options.colorer : fallback;
  std::vector<Hash128> colors(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) colors[v] = initial_color(g, v, {}, colorer);
  const std::size_t rounds = refine_to_stability({{}, g.offsets(), g.targets(), g.edge_labels_csr()}, colors, colorer);
  return finish(std::move(colors), rounds);
}

ColorPartition subgraph_wl(const Graph& g, const RefinementOptions& options) {
  HashColorer fallback;
  Colorer& colorer = options.colorer ? *options.colorer : fallback;
  const std::size_t n = g.num_nodes();
  std::vector<Hash128> colors(n);
  std::vector<std::size_t> rounds(n, 0);
  parallel_for(n, effective_threads(options), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const RootedSubgraph sub = extract_rooted(g, static_cast<NodeId>(i), options.policy, options.labeling);
      colors[i] = subgraph_color(g, sub, kSubgraph, colorer, rounds[i]);
    }
  });
  const std::size_t max_rounds = n == 0 ? 0 : *std::max_element(rounds.begin(), rounds.end());
  return finish(std::move(colors), max_rounds);
}

ColorPartition i2_wl(const Graph& g, const RefinementOptions& options) {
  if (options.hops < 1) throw PreconditionError("i2_wl needs at least 1 hop");
  HashColorer fallback;
  Colorer& colorer = options.colorer ? *options.colorer : fallback;
  const std::size_t n = g.num_nodes();
  std::vector<Hash128> colors(n);
  std::vector<std::size_t> rounds(n, 0);
  parallel_for(n, effective_threads(options), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId root = static_cast<NodeId>(i);
      std::vector<Hash128> pair_colors{tag(kNode)};
      for (NodeId j : g.neighbors(root)) {
        const RootedSubgraph sub = extract_pair(g, root, j, ExtractionPolicy::ego(options.hops), Labeling::identity);
        std::size_t r = 0;
        pair_colors.push_back(subgraph_color(g, sub, kPair, colorer, r));
        rounds[i] = std::max(rounds[i], r);
      }
      std::sort(pair_colors.begin() + 1, pair_colors.end());
      colors[i] = colorer.color(pair_colors);
    }
  });
  const std::size_t max_rounds = n == 0 ? 0 : *std::max_element(rounds.begin(), rounds.end());
  return finish(std::move(colors), max_rounds);
}

ColorPartition refine(const Graph& g, RefinementMethod method, const RefinementOptions& options) {
  switch (method) {
    case RefinementMethod::wl1: return wl1(g, options);
    case RefinementMethod::subgraph_wl: return subgraph_wl(g, options);
    case RefinementMethod::i2_wl: return i2_wl(g, options);
  }
  throw InternalError("unknown refinement method");
}

GraphFingerprint fingerprint(const Graph& g, RefinementMethod method, const RefinementOptions& options) {
  return {method, refine(g, method, options).digest()};
}

Verdict distinguish(const Graph& a, const Graph& b, RefinementMethod method, const RefinementOptions& options,
                    bool exact_compare) {
  if (!exact_compare) {
    return fingerprint(a, method, options).digest == fingerprint(b, method, options).digest
               ? Verdict::not_distinguished
               : Verdict::distinguished;
  }
  ExactColorer shared;
  RefinementOptions opts = options;
  opts.colorer = &shared;
  const auto ha = refine(a, method, opts).histogram();
  const auto hb = refine(b, method, opts).histogram();
  return ha == hb ? Verdict::not_distinguished : Verdict::distinguished;
}

}  // namespace subcount
