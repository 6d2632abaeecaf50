//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subcount/error.hpp"
#include "subcount/parallel.hpp"

namespace subcount {

namespace {

void check_budget(const Graph& g, unsigned length, const OracleOptions& options) {
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const double estimate = static_cast<double>(g.num_nodes()) * std::pow(static_cast<double>(max_degree), length);
  if (estimate > options.budget) {
    throw BudgetError("enumeration estimate " + std::to_string(estimate) + " exceeds budget " +
                      std::to_string(options.budget));
  }
}

// Calls visit(path) for every simple path of `length` edges starting at s.
template <typename Visit>
void for_each_path_from(const Graph& g, NodeId s, unsigned length, Visit&& visit) {
  std::vector<NodeId> path{s};
  std::vector<char> on_path(g.num_nodes(), 0);
  on_path[s] = 1;
  auto rec = [&](auto&& self) -> void {
    if (path.size() == length + 1) {
      visit(std::as_const(path));
      return;
    }
    for (NodeId v : g.neighbors(path.back())) {
      if (on_path[v]) continue;
      on_path[v] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      on_path[v] = 0;
    }
  };
  rec(rec);
}

}  // namespace

PathCounts oracle_paths(const Graph& g, unsigned length, const OracleOptions& options) {
  if (length < 2 || length > 6) throw PreconditionError("path length must be in 2..6");
  check_budget(g, length, options);
  const std::size_t n = g.num_nodes();
  PathCounts out;
  out.endpoint.assign(n, 0);
  std::vector<Count> canonical(n, 0);
  parallel_for(n, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      for_each_path_from(g, static_cast<NodeId>(s), length, [&](const std::vector<NodeId>& p) {
        ++out.endpoint[s];
        if (p.front() < p.back()) ++canonical[s];
      });
    }
  });
  out.graph = std::accumulate(canonical.begin(), canonical.end(), Count{0});
  return out;
}

std::vector<Count> oracle_path_matrix(const Graph& g, unsigned length, const OracleOptions& options) {
  if (length < 1 || length > 6) throw PreconditionError("path length must be in 1..6");
  check_budget(g, length, options);
  const std::size_t n = g.num_nodes();
  std::vector<Count> m(n * n, 0);
  for (NodeId s = 0; s < n; ++s) {
    for_each_path_from(g, s, length, [&](const std::vector<NodeId>& p) { ++m[s * n + p.back()]; });
  }
  return m;
}

CycleCounts oracle_cycles(const Graph& g, unsigned length, const OracleOptions& options) {
  if (length < 3 || length > 8) throw PreconditionError("cycle length must be in 3..8");
  check_budget(g, length, options);
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<Count>> per_start(n);
  parallel_for(n, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      std::vector<Count> local(n, 0);
      bool any = false;
      // The smallest node starts the cycle; of the two directions keep the
      // one whose second node is smaller than its last.
      for_each_path_from(g, static_cast<NodeId>(s), length - 1, [&](const std::vector<NodeId>& p) {
        if (p[1] > p.back()) return;
        for (NodeId v : p) {
          if (v < s) return;
        }
        if (!g.has_edge(p.back(), p.front())) return;
        for (NodeId v : p) ++local[v];
        any = true;
      });
      if (any) per_start[s] = std::move(local);
    }
  });
  CycleCounts out;
  out.node.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (per_start[s].empty()) continue;
    out.graph += per_start[s][s];
    for (std::size_t v = 0; v < n; ++v) out.node[v] += per_start[s][v];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphlets by injective pattern embedding.

namespace {

struct Pattern {
  std::size_t size;
  std::vector<std::pair<int, int>> edges;  // node 0 is the marked position

  bool adjacent(int a, int b) const {
    return std::any_of(edges.begin(), edges.end(), [&](auto e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  }
};

Pattern pattern_for(Substructure kind) {
  switch (kind) {
    case Substructure::clique4: return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    // 1 - 2 is the chord; 0 and 3 are off the chord.
    case Substructure::chordal_cycle: return {4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    // 0 carries the tail 1.
    case Substructure::tailed_triangle: return {4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}};
    // triangle 0 - 1 - 2 sharing edge 1 - 2 with the 4-cycle 1 - 3 - 4 - 2.
    case Substructure::triangle_rectangle: return {5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}}};
    default: throw PreconditionError("no graphlet pattern for " + std::string(to_string(kind)));
  }
}

// Automorphisms of the pattern; `fix_marked` restricts to those fixing 0.
Count automorphisms(const Pattern& p, bool fix_marked) {
  std::vector<int> perm(p.size);
  std::iota(perm.begin(), perm.end(), 0);
  Count count = 0;
  do {
    if (fix_marked && perm[0] != 0) continue;
    const bool ok = std::all_of(p.edges.begin(), p.edges.end(),
                                [&](auto e) { return p.adjacent(perm[e.first], perm[e.second]); });
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Injective edge-preserving maps of the pattern into g with 0 -> root.
Count embeddings_at(const Graph& g, const Pattern& p, NodeId root) {
  std::vector<NodeId> image(p.size);
  std::vector<char> used(g.num_nodes(), 0);
  image[0] = root;
  used[root] = 1;
  Count count = 0;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (next == p.size) {
      ++count;
      return;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < next && ok; ++prev) {
        if (p.adjacent(static_cast<int>(prev), static_cast<int>(next)) && !g.has_edge(image[prev], v)) ok = false;
      }
      if (!ok) continue;
      used[v] = 1;
      image[next] = v;
      self(self, next + 1);
      used[v] = 0;
    }
  };
  rec(rec, 1);
  return count;
}

}  // namespace

GraphletCounts oracle_graphlets(const Graph& g, Substructure kind) {
  const Pattern p = pattern_for(kind);
  const Count fixed = automorphisms(p, true);
  const Count all = automorphisms(p, false);
  GraphletCounts out;
  out.node.assign(g.num_nodes(), 0);
  Count total = 0;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const Count e = embeddings_at(g, p, i);
    out.node[i] = exact_div(e, fixed, "graphlet embeddings at a node");
    total += e;
  }
  out.graph = exact_div(total, all, "graphlet embeddings");
  return out;
}

Count oracle_walks(const Graph& g, unsigned length, NodeId i, NodeId j) {
  const std::size_t n = g.num_nodes();
  if (i >= n || j >= n) throw ValidationError("walk endpoints out of range");
  std::vector<Count> cur(n, 0), next(n);
  cur[i] = 1;
  for (unsigned t = 0; t < length; ++t) {
    std::fill(next.begin(), next.end(), 0);
    for (NodeId u = 0; u < n; ++u) {
      if (cur[u] == 0) continue;
      for (NodeId v : g.neighbors(u)) next[v] = checked_add(next[v], cur[u]);
    }
    cur.swap(next);
  }
  return cur[j];
}

std::vector<std::array<Count, 5>> oracle_cycle6_patterns(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::array<Count, 5>> out(n, std::array<Count, 5>{});
  for (NodeId i = 0; i < n; ++i) {
    auto& row = out[i];
    for_each_path_from(g, i, 4, [&](const std::vector<NodeId>& p) {
      const NodeId k = p[4];
      for (NodeId m : g.neighbors(i)) {
        if (!g.has_edge(m, k)) continue;
        ++row[0];
        if (m == p[3]) ++row[1];
        if (m == p[2]) ++row[2];
        if (m == p[1]) ++row[3];
      }
    });
    Count diamonds = 0;
    for (NodeId j : g.neighbors(i)) {
      for (NodeId l : g.neighbors(i)) {
        if (l == j || !g.has_edge(j, l)) continue;
        for (NodeId k : g.neighbors(j)) {
          if (k != i && k != l && g.has_edge(k, l)) ++diamonds;
        }
      }
    }
    row[4] = exact_div(diamonds, 2, "diamond pairs");
  }
  return out;
}

std::vector<Path4Entry> oracle_path4_table(const Graph& g) {
  std::vector<Path4Entry> table;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    std::vector<std::pair<std::pair<NodeId, NodeId>, Count>> found;
    for_each_path_from(g, i, 4, [&](const std::vector<NodeId>& p) { found.push_back({{p[1], p[4]}, 1}); });
    std::sort(found.begin(), found.end());
    for (const auto& [key, one] : found) {
      if (!table.empty() && table.back().root == i && table.back().branching == key.first &&
          table.back().target == key.second) {
        table.back().paths += one;
      } else {
        table.push_back({i, key.first, key.second, one});
      }
    }
  }
  return table;
}

CountReport oracle_count(const Graph& g, Substructure kind, unsigned walk_length, const OracleOptions& options) {
  CountReport report;
  report.kind = kind;
  report.pattern_names = pattern_names(kind);
  switch (kind) {
    case Substructure::path2:
    case Substructure::path3:
    case Substructure::path4:
    case Substructure::path4_graphlet: {
      const unsigned length = kind == Substructure::path2 ? 2 : kind == Substructure::path3 ? 3 : 4;
      PathCounts c = oracle_paths(g, length, options);
      report.node = std::move(c.endpoint);
      report.graph = c.graph;
      break;
    }
    case Substructure::cycle3:
    case Substructure::cycle4:
    case Substructure::cycle5:
    case Substructure::cycle6: {
      const unsigned length = 3 + static_cast<unsigned>(kind) - static_cast<unsigned>(Substructure::cycle3);
      CycleCounts c = oracle_cycles(g, length, options);
      report.node = std::move(c.node);
      report.graph = c.graph;
      if (kind == Substructure::cycle6) {
        for (const auto& row : oracle_cycle6_patterns(g)) report.patterns.emplace_back(row.begin(), row.end());
      }
      break;
    }
    case Substructure::clique4:
    case Substructure::chordal_cycle:
    case Substructure::tailed_triangle:
    case Substructure::triangle_rectangle: {
      GraphletCounts c = oracle_graphlets(g, kind);
      report.node = std::move(c.node);
      report.graph = c.graph;
      break;
    }
    case Substructure::walk: {
      report.walk_length = walk_length;
      for (NodeId i = 0; i < g.num_nodes(); ++i) {
        report.node.push_back(oracle_walks(g, walk_length, i, i));
        report.graph = checked_add(report.graph, report.node.back());
      }
      break;
    }
  }
  return report;
}

}  // namespace subcount
