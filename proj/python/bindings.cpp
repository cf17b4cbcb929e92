#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitclust/certificates.hpp"
#include "splitclust/critical_clique.hpp"
#include "splitclust/error.hpp"
#include "splitclust/graph.hpp"
#include "splitclust/graph_io.hpp"
#include "splitclust/hunter.hpp"
#include "splitclust/json.hpp"
#include "splitclust/kernel.hpp"
#include "splitclust/reductions.hpp"
#include "splitclust/solvers.hpp"

namespace py = pybind11;
using namespace splitclust;

namespace {

using Sets = std::vector<std::vector<std::string>>;

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json to_json_value(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

VertexSet ids(const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(VertexId::parse(n));
  return normalized(out);
}

Family family(const Sets& sets) {
  Family f;
  for (const auto& s : sets) f.push_back(ids(s));
  return f;
}

Sets names(const Family& f) {
  Sets out;
  for (const auto& s : f) {
    auto& row = out.emplace_back();
    for (const auto& v : s) row.push_back(v.str());
  }
  return out;
}

Problem problem(const std::string& s) {
  if (auto p = parse_problem(s)) return *p;
  throw py::value_error("unknown problem '" + s + "'");
}

SolverOptions options(bool parallel, bool override_limit, bool exact_packing) {
  auto o = SolverOptions::from_env();
  o.parallel = parallel;
  o.override_limit = override_limit;
  o.exact_packing = exact_packing;
  return o;
}

py::dict report(const VerifyReport& r) {
  py::dict d;
  d["valid"] = r.valid;
  d["reason"] = r.reason;
  py::dict m;
  for (const auto& [k, v] : r.metrics) m[py::str(k)] = v;
  d["metrics"] = m;
  return d;
}

std::vector<std::tuple<std::string, std::string, std::string>> triples(const std::vector<P3>& ps) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& p : ps) out.emplace_back(p.x.str(), p.center.str(), p.z.str());
  return out;
}

P3Packing packing(const std::vector<std::tuple<std::string, std::string, std::string>>& ts) {
  P3Packing p;
  for (const auto& [x, y, z] : ts) p.triples.push_back(P3{VertexId::parse(x), VertexId::parse(y), VertexId::parse(z)});
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sigma clique covers, cluster vertex splitting and cluster editing with vertex splitting";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
             VertexSet vs;
             for (const auto& v : vertices) vs.push_back(VertexId::parse(v));
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) es.push_back(Edge{VertexId::parse(u), VertexId::parse(v)});
             return Graph(std::move(vs), es);
           }),
           py::arg("vertices"), py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("read", [](const std::string& path) { return read_graph(path); })
      .def_property_readonly("vertices",
                             [](const Graph& g) {
                               std::vector<std::string> out;
                               for (const auto& v : g.vertices()) out.push_back(v.str());
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u.str(), e.v.str());
                               return out;
                             })
      .def("__len__", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("is_cluster", [](const Graph& g) { return is_cluster_graph(g); })
      .def("induced_p3s", [](const Graph& g) { return triples(enumerate_induced_p3(g)); })
      .def("critical_cliques", [](const Graph& g) { return names(critical_clique_graph(g).classes); })
      .def("split",
           [](const Graph& g, const std::string& target, const std::vector<std::string>& a,
              const std::vector<std::string>& b) { return apply_split(g, Split{VertexId::parse(target), ids(a), ids(b)}); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__str__", [](const Graph& g) { return format_graph(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.order()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("cover_cost", [](const Graph& g, const Sets& sets) {
    const auto c = cover_cost(g, Cover(family(sets)));
    py::dict d;
    d["total"] = c.total();
    d["nonedges_inside"] = c.nonedges_inside;
    d["edges_outside"] = c.edges_outside;
    d["overlap_excess"] = c.overlap_excess;
    return d;
  });
  m.def("respects_critical_cliques",
        [](const Graph& g, const Sets& sets) { return cover_respects_critical_cliques(g, Cover(family(sets))); });

  m.def("verify_sigma_cover", [](const Graph& g, const Sets& s, Budget b) {
    return report(verify_sigma_cover(g, SigmaCliqueCover(family(s)), b));
  });
  m.def("verify_node_cover", [](const Graph& g, const Sets& s, Budget b) {
    return report(verify_node_cover(g, NodeCliqueCover(family(s)), b));
  });
  m.def("verify_cover", [](const Graph& g, const Sets& s, Budget b) { return report(verify_cover(g, Cover(family(s)), b)); });
  m.def(
      "verify_sequence",
      [](const Graph& g, const py::object& steps, Budget b, const std::string& p) {
        return report(verify_modification_sequence(g, sequence_from_json(to_json_value(steps)), b, problem(p)));
      },
      py::arg("graph"), py::arg("steps"), py::arg("budget"), py::arg("problem") = "cevs");
  m.def("verify_packing", [](const Graph& g, const std::vector<std::tuple<std::string, std::string, std::string>>& t) {
    return report(verify_p3_packing(g, packing(t)));
  });

  m.def(
      "solve_scc",
      [](const Graph& g, Budget s, bool par, bool over) -> std::optional<Sets> {
        if (auto c = solve_scc_exact(g, s, options(par, over, false))) return names(c->sets());
        return std::nullopt;
      },
      py::arg("graph"), py::arg("budget"), py::arg("parallel") = false, py::arg("override_limit") = false);
  m.def(
      "solve_ncc",
      [](const Graph& g, Budget k, bool par, bool over) -> std::optional<Sets> {
        if (auto c = solve_ncc_exact(g, k, options(par, over, false))) return names(c->sets());
        return std::nullopt;
      },
      py::arg("graph"), py::arg("budget"), py::arg("parallel") = false, py::arg("override_limit") = false);
  m.def(
      "solve_cvs",
      [](const Graph& g, Budget k, bool par, bool over) -> py::object {
        if (auto s = solve_cvs_exact(Instance{Problem::CVS, g, k}, options(par, over, false))) {
          return from_json(to_json(as_modifications(*s)));
        }
        return py::none();
      },
      py::arg("graph"), py::arg("budget"), py::arg("parallel") = false, py::arg("override_limit") = false);
  m.def(
      "solve_cevs",
      [](const Graph& g, Budget k, bool par, bool over, bool exact) -> py::object {
        if (auto s = solve_cevs_exact(Instance{Problem::CEVS, g, k}, options(par, over, exact))) {
          py::dict d;
          d["cover"] = names(s->cover.sets());
          d["sequence"] = from_json(to_json(s->sequence));
          return std::move(d);
        }
        return py::none();
      },
      py::arg("graph"), py::arg("budget"), py::arg("parallel") = false, py::arg("override_limit") = false,
      py::arg("exact_packing") = false);
  m.def(
      "scc_optimum", [](const Graph& g, bool over) { return scc_optimum(g, options(false, over, false)); },
      py::arg("graph"), py::arg("override_limit") = false);
  m.def(
      "cevs_optimum", [](const Graph& g, bool over) { return cevs_optimum(g, options(false, over, false)); },
      py::arg("graph"), py::arg("override_limit") = false);
  m.def(
      "enumerate_covers",
      [](const Graph& g, std::size_t bound) {
        std::vector<Sets> out;
        for (const auto& c : enumerate_covers(g, bound, options(false, false, false))) out.push_back(names(c.sets()));
        return out;
      },
      py::arg("graph"), py::arg("bound"));
  m.def(
      "max_p3_packing",
      [](const Graph& g, bool exact) { return triples(max_p3_packing(g, exact, options(false, false, false)).triples); },
      py::arg("graph"), py::arg("exact") = false);
  m.def("cover_to_modifications",
        [](const Graph& g, const Sets& s) { return from_json(to_json(cover_to_modifications(g, Cover(family(s))))); });
  m.def("modifications_to_cover", [](const Graph& g, const py::object& steps) {
    return names(modifications_to_cover(g, sequence_from_json(to_json_value(steps))).sets());
  });

  m.def("kernelize", [](const Graph& g, Budget k) {
    auto [out, trace] = kernelize(Instance{Problem::CVS, g, k});
    return py::make_tuple(out.graph, out.budget, from_json(to_json(trace)));
  });
  m.def("reduce", [](const std::string& from, const std::string& to, const Graph& g, Budget b) {
    const auto src = problem(from);
    const auto dst = problem(to);
    for (auto k : {ReductionKind::NccToScc, ReductionKind::CvsToScc, ReductionKind::SccToCvs, ReductionKind::CvsToCevs}) {
      if (to_string(k) == std::string(to_string(src)) + "->" + std::string(to_string(dst))) {
        auto [inst, trace] = reduce(Instance{src, g, b}, k);
        return py::make_tuple(inst.graph, inst.budget, from_json(to_json(trace)));
      }
    }
    throw py::value_error("no reduction from " + from + " to " + to);
  });

  m.def("canonical_form", [](const Graph& g) { return canonical_form(g); });
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("connected_only") = false);
  m.def(
      "hunt_graph", [](const Graph& g, bool over) { return from_json(to_json(hunt_graph(g, options(false, over, false)))); },
      py::arg("graph"), py::arg("override_limit") = false);
}
