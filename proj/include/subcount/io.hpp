//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "subcount/graph.hpp"

namespace subcount {

enum class GraphFormat { edgelist, graph6 };

/// Parses "edgelist" or "graph6"; throws ParseError otherwise.
GraphFormat parse_format(std::string_view name);

/// Edge-list text: a header line "N M" followed by M lines "u v" with
/// 0-based node indices. Blank lines and lines starting with '#' are
/// ignored.
Graph parse_edgelist(std::string_view text);

/// Decodes one graph6 record (optional ">>graph6<<" prefix, no newline).
Graph parse_graph6(std::string_view record);

/// Decodes every non-empty line of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Reads a single graph. For graph6 files with several records the first is
/// returned.
Graph load_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::edgelist);

/// Reads every graph in a file (edge-list files always hold exactly one).
std::vector<Graph> load_graphs(const std::filesystem::path& path, GraphFormat format);

/// Canonical edge-list serialization: edges with u < v in lexicographic
/// order, one per line, trailing newline.
std::string to_edgelist(const Graph& g);

void save_edgelist(const Graph& g, const std::filesystem::path& path);

}  // namespace subcount
