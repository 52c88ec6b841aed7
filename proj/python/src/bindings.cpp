#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcast2/broadcast.hpp"
#include "bcast2/cli.hpp"
#include "bcast2/error.hpp"
#include "bcast2/exact.hpp"
#include "bcast2/families.hpp"
#include "bcast2/graph.hpp"
#include "bcast2/reduction.hpp"
#include "bcast2/spanning.hpp"
#include "bcast2/treedp.hpp"

namespace py = pybind11;
using namespace bcast2;

namespace {

BroadcastAssignment to_assignment(const std::vector<int>& values) {
  std::vector<std::uint8_t> out;
  out.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v > 2) throw InputError("broadcast values must be 0, 1 or 2");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return BroadcastAssignment(std::move(out));
}

std::vector<int> to_list(const BroadcastAssignment& f) {
  return {f.values().begin(), f.values().end()};
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["cost"] = r.optimum;
  d["values"] = to_list(r.witness);
  d["method"] = std::string(method_name(r.method));
  d["nodes_explored"] = r.nodes_explored;
  return d;
}

SolveResult solve_with(const Graph& g, const std::string& solver) {
  if (solver == "treedp") return solve_tree(g);
  if (solver == "bnb") return solve_exact(g);
  if (solver == "bruteforce") return solve_bruteforce(g);
  if (solver == "auto") return g.is_tree() ? solve_tree(g) : solve_exact(g);
  throw InputError("unknown solver: " + solver);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dominating 2-broadcasts in graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<Vertex, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
             auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("is_tree", &Graph::is_tree)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
        return s.str();
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("read_graph_file", &read_graph_file);
  m.def("radius", [](const Graph& g) { return metrics(g).radius; });
  m.def("diameter", [](const Graph& g) { return metrics(g).diameter; });

  m.def("is_dominating", [](const Graph& g, const std::vector<int>& f) {
    return is_dominating(g, to_assignment(f));
  });
  m.def("uncovered", [](const Graph& g, const std::vector<int>& f) {
    return validate(g, to_assignment(f)).uncovered;
  });
  m.def("normalize_leaves", [](const Graph& g, const std::vector<int>& f) {
    return to_list(normalize_leaves(g, to_assignment(f)));
  });
  m.def("certificate_json", [](const Graph& g, const std::vector<int>& f) {
    return certificate_json(g, to_assignment(f));
  });

  m.def("solve", [](const Graph& g, const std::string& solver) { return result_dict(solve_with(g, solver)); },
        py::arg("graph"), py::arg("solver") = "auto");
  m.def("enumerate_optima", [](const Graph& g) {
    const OptimaReport r = enumerate_optima(g);
    py::list optima;
    for (const auto& o : r.optima) {
      py::dict d;
      d["values"] = to_list(o.assignment);
      d["efficient"] = o.efficient;
      d["orbit"] = o.orbit;
      optima.append(d);
    }
    py::dict d;
    d["optimum"] = r.optimum;
    d["orbit_count"] = r.orbit_count;
    d["optima"] = optima;
    return d;
  });
  m.def("domination_oracles", [](const Graph& g) {
    const DominationNumbers d = domination_oracles(g);
    return py::make_tuple(d.gamma_b, d.gamma);
  });
  m.def("min_over_spanning_trees", [](const Graph& g) { return min_over_spanning_trees(g); });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("spider_graph", &spider_graph, py::arg("legs"), py::arg("leg_length"));
  m.def("t9_graph", &t9_graph);
  m.def("family_f_graph", &family_f_graph, py::arg("m"), py::arg("seed") = py::none());
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_caterpillar", &random_caterpillar, py::arg("n"), py::arg("seed"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("enumerate_free_trees", &enumerate_free_trees);
  m.def("canonical_tree_form", &canonical_tree_form);
  m.def("in_family_f", [](const Graph& t) { return recognize_family_f(t).has_value(); });
  m.def("audit_bounds", [](const Graph& t) { return audit_bounds(t).to_json(); });

  m.def("reduce_dimacs", [](const std::string& text) {
    Reduction r = build_reduction(parse_dimacs(text));
    return py::make_tuple(std::move(r.graph), r.map.to_json());
  });
  m.def("satisfiable", [](const std::string& text) { return sat_oracle(parse_dimacs(text)).has_value(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
