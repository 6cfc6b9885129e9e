#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsehg/encoding.hpp"
#include "sparsehg/flows.hpp"
#include "sparsehg/sparsity.hpp"
#include "sparsehg/spanning.hpp"
#include "sparsehg/suite.hpp"

namespace py = pybind11;
using namespace sparsehg;

namespace {

PyObject* error_type = nullptr;

Flow flow_from_dict(std::size_t n, const std::map<std::pair<VertexId, VertexId>, std::int64_t>& values) {
  Flow f(n);
  for (const auto& [uv, x] : values) f.add(uv.first, uv.second, x);
  return f;
}

std::map<std::pair<VertexId, VertexId>, std::int64_t> flow_to_dict(const Flow& f) {
  return {f.entries().begin(), f.entries().end()};
}

py::dict sparsity_dict(bool sparse, const std::optional<VertexSet>& witness) {
  py::dict d;
  d["sparse"] = sparse;
  d["witness"] = witness ? py::cast(*witness) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_sparsehg, m) {
  m.doc() = "Sparse hypergraphs: orientations, spanning trees, delta-flows and set encodings";

  error_type = PyErr_NewException("sparsehg.SparsehgError", PyExc_ValueError, nullptr);
  m.add_object("SparsehgError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = e.code_name();
      exc.attr("witness") = py::cast(e.witness());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<>())
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static("parse", py::overload_cast<std::string_view>(&parse_hypergraph), py::arg("text"))
      .def("serialize", &serialize_hypergraph)
      .def("add_vertex", &Hypergraph::add_vertex, py::arg("label") = std::string())
      .def("add_edge", &Hypergraph::add_edge, py::arg("vertices"), py::arg("label") = std::string())
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly("rank", &Hypergraph::rank)
      .def("edge", [](const Hypergraph& h, EdgeId e) {
        auto vs = h.edge(e);
        return std::vector<VertexId>(vs.begin(), vs.end());
      })
      .def("vertex_label", &Hypergraph::vertex_label)
      .def("edge_label", &Hypergraph::edge_label)
      .def("find_vertex", &Hypergraph::find_vertex)
      .def("find_edge", &Hypergraph::find_edge)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; });

  py::class_<UndirectedGraph>(m, "Graph")
      .def(py::init<Hypergraph>(), py::arg("h"))
      .def_static("from_pairs", &UndirectedGraph::from_pairs, py::arg("n"), py::arg("pairs"))
      .def_property_readonly("hypergraph", &UndirectedGraph::hypergraph)
      .def_property_readonly("num_vertices", &UndirectedGraph::num_vertices)
      .def_property_readonly("num_edges", &UndirectedGraph::num_edges)
      .def("neighbours", [](const UndirectedGraph& g, VertexId v) {
        auto ns = g.neighbours(v);
        return std::vector<VertexId>(ns.begin(), ns.end());
      });

  m.def(
      "is_k_sparse",
      [](const Hypergraph& h, std::size_t k, bool oracle, std::size_t cap) {
        auto r = oracle ? is_k_sparse_bruteforce(h, k, cap) : is_k_sparse(h, k);
        return sparsity_dict(r.is_sparse, r.witness);
      },
      py::arg("h"), py::arg("k"), py::arg("oracle") = false, py::arg("cap") = kDefaultBruteForceCap);

  m.def(
      "bounded_orientation",
      [](const Hypergraph& h, std::size_t k) { return bounded_orientation(h, k).heads(); },
      py::arg("h"), py::arg("k"));
  m.def(
      "antisymmetric_orientation",
      [](const Hypergraph& h, std::size_t k) { return antisymmetric_orientation(h, k).heads(); },
      py::arg("h"), py::arg("k"));
  m.def(
      "directed_quotient",
      [](const Hypergraph& h, std::vector<VertexId> heads) {
        return directed_quotient(h, Orientation(h, std::move(heads))).arcs();
      },
      py::arg("h"), py::arg("heads"));

  m.def(
      "build_dfst",
      [](const Hypergraph& h, VertexId root) {
        auto t = build_dfst(h, root);
        py::list out;
        for (const auto& nd : t.nodes()) {
          py::dict d;
          d["vertex"] = nd.vertex;
          d["parent"] = nd.parent ? py::cast(*nd.parent) : py::none();
          d["type"] = format_node_type(nd.type);
          d["attach"] = nd.attach;
          d["aux"] = t.aux(nd.vertex);
          out.append(d);
        }
        return out;
      },
      py::arg("h"), py::arg("root"));
  m.def("dfst_orientation", [](const Hypergraph& h) { return dfst_orientation(h).heads(); }, py::arg("h"));
  m.def("edge_ordering", &edge_ordering, py::arg("h"));
  m.def(
      "neighbourhood_ordering",
      [](std::size_t n, std::vector<DirectedGraph::Arc> arcs) {
        return neighbourhood_ordering(DirectedGraph(n, std::move(arcs)));
      },
      py::arg("n"), py::arg("arcs"));

  m.def(
      "build_priority_tree",
      [](const Hypergraph& h, VertexId root, EdgeSet l0, std::size_t m) {
        auto t = build_priority_tree(h, root, make_vertex_set(std::move(l0)), m);
        py::dict d;
        d["nodes"] = t.nodes;
        d["edges"] = t.edges;
        d["leaves"] = t.leaves;
        d["edge_classes"] = t.edge_classes;
        d["vertex_classes"] = t.vertex_classes;
        d["order"] = priority_tree_linear_order(h, t).sorted(t.nodes);
        return d;
      },
      py::arg("h"), py::arg("root"), py::arg("l0"), py::arg("m") = 0);

  m.def(
      "is_k_sparse_distribution",
      [](const UndirectedGraph& g, std::vector<std::int64_t> delta, std::size_t k, bool oracle) {
        Distribution d(std::move(delta));
        auto r = oracle ? is_k_sparse_distribution_bruteforce(g, d, k) : is_k_sparse_distribution(g, d, k);
        return sparsity_dict(r.is_sparse, r.witness);
      },
      py::arg("g"), py::arg("delta"), py::arg("k"), py::arg("oracle") = false);
  m.def(
      "compute_delta_flow",
      [](const UndirectedGraph& g, std::vector<std::int64_t> delta, std::size_t k) {
        return flow_to_dict(compute_delta_flow(g, Distribution(std::move(delta)), k));
      },
      py::arg("g"), py::arg("delta"), py::arg("k"));
  m.def(
      "check_delta_flow",
      [](std::size_t n, const std::map<std::pair<VertexId, VertexId>, std::int64_t>& flow,
         std::vector<std::int64_t> delta) {
        return check_delta_flow(flow_from_dict(n, flow), Distribution(std::move(delta)));
      },
      py::arg("n"), py::arg("flow"), py::arg("delta"));
  m.def(
      "cancel_cycles",
      [](std::size_t n, const std::map<std::pair<VertexId, VertexId>, std::int64_t>& flow) {
        return flow_to_dict(cancel_cycles(flow_from_dict(n, flow)));
      },
      py::arg("n"), py::arg("flow"));
  m.def(
      "decompose_flow_paths",
      [](const UndirectedGraph& g, const std::map<std::pair<VertexId, VertexId>, std::int64_t>& flow,
         std::vector<std::int64_t> delta) {
        return decompose_flow_paths(g, flow_from_dict(g.num_vertices(), flow), Distribution(std::move(delta)))
            .paths;
      },
      py::arg("g"), py::arg("flow"), py::arg("delta"));

  m.def(
      "refine_to_injective",
      [](const UndirectedGraph& g, std::vector<FiniteSetFunction::Entry> entries, std::size_t k) {
        FiniteSetFunction h(g.num_vertices(), std::move(entries));
        auto r = refine_to_injective(g, h, k);
        py::dict d;
        d["h0"] = r.h0.entries();
        d["gmap"] = r.gmap;
        d["delta"] = r.delta.values();
        d["verified"] = verify_encoding(h, r.h0, r.gmap);
        return d;
      },
      py::arg("g"), py::arg("entries"), py::arg("k"));

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> cases) {
        return format_report(run_suite(name, seed, cases));
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("cases") = py::none());
}
