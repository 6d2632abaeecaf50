//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "subcount/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "subcount/error.hpp"

namespace subcount {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6") return GraphFormat::graph6;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_edgelist(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got " +
                       std::to_string(toks.size()) + " fields");
    }
    const std::uint64_t a = parse_uint(toks[0], line_no);
    const std::uint64_t b = parse_uint(toks[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > std::numeric_limits<NodeId>::max()) throw ParseError("node count too large");
      edges.reserve(m);
      continue;
    }
    if (a >= n || b >= n) {
      throw ValidationError("line " + std::to_string(line_no) + ": node index out of range 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
    }
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
  }
  if (!have_header) throw ParseError("missing 'N M' header line");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph6(std::string_view record) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (record.starts_with(kPrefix)) record.remove_prefix(kPrefix.size());
  while (!record.empty() && (record.back() == '\r' || record.back() == ' ')) record.remove_suffix(1);
  if (record.empty()) throw ParseError("empty graph6 record");
  for (char c : record) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range 63..126");
  }

  std::size_t p = 0;
  auto next = [&]() -> std::uint64_t {
    if (p >= record.size()) throw ParseError("graph6: record truncated");
    return static_cast<std::uint64_t>(record[p++] - 63);
  };
  std::uint64_t n = 0;
  if (record[0] != 126) {
    n = next();
  } else {
    ++p;
    const int words = (record.size() > 1 && record[1] == 126) ? 6 : 3;
    if (words == 6) ++p;
    for (int k = 0; k < words; ++k) n = (n << 6) | next();
  }
  if (n > std::numeric_limits<NodeId>::max()) throw ParseError("graph6: node count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (record.size() - p != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for " +
                     std::to_string(n) + " nodes, got " + std::to_string(record.size() - p));
  }
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t v = 1; v < n; ++v) {
    for (std::uint64_t u = 0; u < v; ++u, ++bit) {
      const auto byte = static_cast<std::uint64_t>(record[p + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1U) {
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  if (format == GraphFormat::edgelist) return parse_edgelist(read_file(path));
  auto graphs = parse_graph6_lines(read_file(path));
  if (graphs.empty()) throw ParseError(path.string() + ": no graph6 records");
  return std::move(graphs.front());
}

std::vector<Graph> load_graphs(const std::filesystem::path& path, GraphFormat format) {
  if (format == GraphFormat::edgelist) return {parse_edgelist(read_file(path))};
  return parse_graph6_lines(read_file(path));
}

std::string to_edgelist(const Graph& g) {
  std::string out = std::to_string(g.num_nodes()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void save_edgelist(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_edgelist(g);
}

}  // namespace subcount
