#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindeg/generate.hpp"
#include "mindeg/goodset.hpp"
#include "mindeg/graph.hpp"
#include "mindeg/pipeline.hpp"

namespace py = pybind11;
using namespace mindeg;

namespace {

std::vector<Vertex> ids(const VertexSet &s) { return s.ids(); }

py::dict result_dict(const ExtractionResult &r, const Graph &g) {
  py::dict d;
  d["k"] = r.k;
  d["branch"] = to_string(r.branch);
  d["subgraph"] = ids(r.subgraph);
  d["core"] = ids(r.core);
  py::list removed;
  for (const auto &c : r.removed) removed.append(ids(c.vertices));
  d["removed"] = removed;
  if (r.guarantee) d["guarantee"] = r.guarantee->value;
  else d["guarantee"] = py::none();
  d["verified"] = verify_certificate(g, r.k, r).ok();
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Large subgraphs of minimum degree k";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<Edge> &edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string &text) { return load_graph(text).graph; })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("min_degree", &Graph::min_degree)
      .def("edges", &Graph::edges)
      .def("to_edge_list", [](const Graph &g) { return format_edge_list(g); })
      .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
      .def("__repr__", [](const Graph &g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("k_core", [](const Graph &g, std::size_t k) { return ids(k_core(g, k)); }, py::arg("g"), py::arg("k"));
  m.def("induces_min_degree",
        [](const Graph &g, const std::vector<Vertex> &w, std::size_t k) {
          return induces_min_degree(g, VertexSet(w), k);
        },
        py::arg("g"), py::arg("w"), py::arg("k"));
  m.def("t_threshold", &t_threshold, py::arg("k"), py::arg("n"));
  m.def("size_bound",
        [](std::int64_t k, std::int64_t n, const std::string &which) {
          return size_bound(k, n, which == "sqrt" ? BoundKind::sqrt : BoundKind::main);
        },
        py::arg("k"), py::arg("n"), py::arg("which") = "main");
  m.def("maximal_good_sets",
        [](const Graph &g, std::size_t k) {
          std::vector<std::vector<Vertex>> out;
          for (const auto &s : maximal_good_sets(g, k)) out.push_back(ids(s.vertices));
          return out;
        },
        py::arg("g"), py::arg("k"));
  m.def("extract",
        [](const Graph &g, std::size_t k, const std::string &strategy, bool peel_shortcut) {
          return result_dict(extract(g, k, parse_strategy(strategy), ExtractOptions{peel_shortcut}), g);
        },
        py::arg("g"), py::arg("k"), py::arg("strategy") = "theorem3", py::arg("peel_shortcut") = false);

  m.def("gen_wheel", &gen_wheel, py::arg("k"), py::arg("n"));
  m.def("gen_extremal_plus_one", &gen_extremal_plus_one, py::arg("k"), py::arg("n"), py::arg("seed") = 0);
  m.def("gen_random_with_edges", &gen_random_with_edges, py::arg("n"), py::arg("m"), py::arg("seed") = 0);

  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ClaimViolation>(m, "ClaimViolation", PyExc_RuntimeError);
}
