//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subcount/counting.hpp"
#include "subcount/error.hpp"
#include "subcount/generators.hpp"
#include "subcount/io.hpp"
#include "subcount/oracle.hpp"
#include "subcount/refinement.hpp"

namespace py = pybind11;
using namespace subcount;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

py::dict report_dict(const CountReport& r) {
  py::dict d;
  d["kind"] = std::string(to_string(r.kind));
  d["hops"] = r.hops;
  d["node"] = r.node;
  d["graph"] = r.graph;
  if (!r.pattern_names.empty()) {
    py::dict patterns;
    for (std::size_t c = 0; c < r.pattern_names.size(); ++c) {
      std::vector<Count> column;
      for (const auto& row : r.patterns) column.push_back(row[c]);
      patterns[py::str(r.pattern_names[c])] = column;
    }
    d["patterns"] = patterns;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact substructure counting with message-passing programs";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ProgramError>(m, "ProgramError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("num_nodes"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors",
           [](const Graph& g, NodeId i) {
             auto s = g.neighbors(i);
             return std::vector<NodeId>(s.begin(), s.end());
           })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<NodeId, NodeId>> out;
             for (Edge e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("permuted", [](const Graph& g, const std::vector<NodeId>& perm) { return g.permuted(perm); })
      .def("to_edgelist", [](const Graph& g) { return to_edgelist(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<subcount.Graph nodes=" + std::to_string(g.num_nodes()) + " edges=" + std::to_string(g.num_edges()) +
               ">";
      });

  m.def("parse_edgelist", [](const std::string& text) { return parse_edgelist(text); });
  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
  m.def("load_graph", [](const std::string& path, const std::string& format) {
    return load_graph(path, parse_format(format));
  }, py::arg("path"), py::arg("format") = "edgelist");

  m.def("gen_cycle", &gen_cycle);
  m.def("gen_cycle_pair", &gen_cycle_pair);
  m.def("gen_coned_cycles", &gen_coned_cycles);
  m.def("gen_rook4x4", &gen_rook4x4);
  m.def("gen_shrikhande", &gen_shrikhande);
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_random_regular", &gen_random_regular, py::arg("n"), py::arg("degree"), py::arg("seed"));
  m.def("gen_path", &gen_path);
  m.def("gen_complete", &gen_complete);
  m.def("gen_petersen", &gen_petersen);

  m.def(
      "count",
      [](const Graph& g, const std::string& substructure, std::optional<unsigned> hops, unsigned threads) {
        CountOptions options;
        unsigned walk = 4;
        const Substructure kind = parse_substructure(substructure, &walk);
        options.hops = hops;
        options.walk_length = walk;
        options.threads = threads;
        CountReport r;
        {
          py::gil_scoped_release release;
          r = count_substructure(g, kind, options);
        }
        return report_dict(r);
      },
      py::arg("graph"), py::arg("substructure"), py::arg("hops") = py::none(), py::arg("threads") = 1);

  m.def(
      "oracle",
      [](const Graph& g, const std::string& substructure) {
        unsigned walk = 4;
        const Substructure kind = parse_substructure(substructure, &walk);
        return report_dict(oracle_count(g, kind, walk));
      },
      py::arg("graph"), py::arg("substructure"));

  m.def("oracle_cycles", [](const Graph& g, unsigned length) {
    CycleCounts c = oracle_cycles(g, length);
    return std::make_pair(c.node, c.graph);
  });
  m.def("count_walks", &count_walks, py::arg("graph"), py::arg("length"), py::arg("i"), py::arg("j"));

  m.def(
      "digest",
      [](const Graph& g, const std::string& method, unsigned hops) {
        RefinementOptions options;
        options.hops = hops;
        return fingerprint(g, parse_method(method), options).digest.hex();
      },
      py::arg("graph"), py::arg("method"), py::arg("hops") = 1);

  m.def(
      "distinguish",
      [](const Graph& a, const Graph& b, const std::string& method, unsigned hops, bool exact_compare) {
        RefinementOptions options;
        options.hops = hops;
        return std::string(to_string(distinguish(a, b, parse_method(method), options, exact_compare)));
      },
      py::arg("a"), py::arg("b"), py::arg("method"), py::arg("hops") = 1, py::arg("exact_compare") = false);
}
