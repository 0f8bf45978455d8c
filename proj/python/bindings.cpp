#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "listfold/audit.hpp"
#include "listfold/certificate.hpp"
#include "listfold/fractional.hpp"
#include "listfold/gadget.hpp"
#include "listfold/json_io.hpp"

namespace py = pybind11;

namespace {

using namespace listfold;

Budget make_budget(std::optional<double> seconds, std::optional<std::uint64_t> nodes) {
  Budget b;
  if (seconds) b.max_time = std::chrono::milliseconds(static_cast<long long>(*seconds * 1000.0));
  b.max_nodes = nodes;
  return b;
}

py::dict outcome_dict(const Graph& g, const ListAssignment& lists, const SolveOutcome& o) {
  py::dict d;
  d["verdict"] = std::string(to_string(o.verdict));
  d["witness"] = o.witness ? py::object(py::str(json::coloring(g, lists.universe(), *o.witness).dump()))
                           : py::object(py::none());
  d["nodes"] = o.stats.nodes;
  d["wall_ms"] = o.stats.wall_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_listfold, m) {
  m.doc() = "Core bindings; see the listfold package for the Python API.";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ColorError>(m, "ColorError", PyExc_ValueError);
  py::register_exception<GadgetError>(m, "GadgetError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.def("epsilon", [](int mm) {
    const Rational e = epsilon_of(mm);
    return py::make_tuple(e.numerator(), e.denominator());
  });

  m.def(
      "gadget_graph",
      [](const std::string& format) {
        return export_graph(gadget_graph(), format == "dot" ? ExportFormat::kDot : ExportFormat::kJson);
      },
      py::arg("format") = "json");

  m.def(
      "gadget_lists",
      [](int mm, std::optional<int> e) {
        const GadgetH h = build_H(FoldParams::of(mm), e);
        return lists_to_json(h.graph, h.lists);
      },
      py::arg("m"), py::arg("e") = py::none());

  m.def("composed_counts", [](int mm) {
    const ComposedGadget g = build_G(FoldParams::of(mm), false);
    py::dict d;
    d["list_size"] = g.list_size;
    d["p"] = g.p.str();
    d["copies"] = g.copies.str();
    d["vertices"] = g.vertex_count.str();
    d["edges"] = g.edge_count.str();
    return d;
  });

  m.def(
      "solve",
      [](const std::string& graph_json, const std::string& lists_json, int b, std::optional<double> seconds,
         std::optional<std::uint64_t> nodes, bool orbit_symmetry, bool odd_cycle_cut, std::string method) {
        const Graph g = graph_from_json(graph_json);
        const ListAssignment lists = lists_from_json(g, lists_json);
        const Budget budget = make_budget(seconds, nodes);
        SolveOutcome out;
        {
          py::gil_scoped_release release;
          if (method == "brute") {
            out = brute_force_solve(g, lists, b, budget);
          } else if (method == "greedy") {
            out = greedy_degenerate_solve(g, lists, b);
          } else {
            SolveOptions o;
            o.orbit_symmetry = orbit_symmetry;
            o.odd_cycle_cut = odd_cycle_cut;
            out = solve(g, lists, b, budget, o);
          }
        }
        return outcome_dict(g, lists, out);
      },
      py::arg("graph"), py::arg("lists"), py::arg("b"), py::arg("seconds") = py::none(),
      py::arg("nodes") = py::none(), py::arg("orbit_symmetry") = true, py::arg("odd_cycle_cut") = false,
      py::arg("method") = "search");

  m.def(
      "verify_coloring",
      [](const std::string& graph_json, const std::string& lists_json, const std::string& coloring_json) {
        const Graph g = graph_from_json(graph_json);
        const ListAssignment lists = lists_from_json(g, lists_json);
        const CheckResult r = verify_coloring(g, lists, coloring_from_json(g, lists.universe(), coloring_json));
        return py::make_tuple(r.accepted, r.reason);
      },
      py::arg("graph"), py::arg("lists"), py::arg("coloring"));

  m.def(
      "verify_lemma1",
      [](int mm, std::optional<double> seconds) {
        Lemma1Result r;
        {
          py::gil_scoped_release release;
          r = verify_lemma1(FoldParams::of(mm), make_budget(seconds, std::nullopt));
        }
        return py::make_tuple(std::string(to_string(lemma1_status(r))), lemma1_certificate_json(r));
      },
      py::arg("m"), py::arg("seconds") = py::none());

  m.def(
      "verify_theorem1",
      [](int mm, const std::string& mode, std::optional<double> seconds, std::uint64_t cap) {
        if (mode != "exhaustive" && mode != "representative") throw py::value_error("mode is exhaustive or representative");
        const Theorem1Mode md = mode == "exhaustive" ? Theorem1Mode::kExhaustive : Theorem1Mode::kRepresentative;
        NonChoosabilityCertificate c;
        {
          py::gil_scoped_release release;
          c = verify_theorem1(FoldParams::of(mm), md, make_budget(seconds, std::nullopt), cap);
        }
        return py::make_tuple(std::string(to_string(c.verdict)), theorem1_certificate_json(c));
      },
      py::arg("m"), py::arg("mode") = "exhaustive", py::arg("seconds") = py::none(),
      py::arg("cap") = kDefaultExplicitCap);

  m.def("check_certificate", [](const std::string& text) {
    const CertificateCheck c = check_certificate(text);
    py::dict d;
    d["accepted"] = c.accepted;
    d["kind"] = c.kind;
    d["log"] = c.log;
    d["reason"] = c.reason;
    return d;
  });

  m.def(
      "audit_exhaustive",
      [](int mm, std::optional<int> e, std::optional<double> seconds) {
        const GadgetH h = build_H(FoldParams::of(mm), e);
        ExhaustiveAudit a;
        {
          py::gil_scoped_release release;
          a = audit_exhaustive(h, make_budget(seconds, std::nullopt));
        }
        py::dict d;
        d["colorings"] = a.colorings;
        d["max_available_w"] = a.max_available_w;
        d["contradictions"] = a.contradictions;
        d["bound_violations"] = a.bound_violations;
        d["complete"] = a.complete;
        return d;
      },
      py::arg("m"), py::arg("e") = py::none(), py::arg("seconds") = py::none());

  m.def(
      "audit_coloring",
      [](int mm, std::optional<int> e, const std::string& coloring_json) {
        const GadgetH h = build_H(FoldParams::of(mm), e);
        return audit_to_json(audit_chain(h, coloring_from_json(h.graph, h.lists.universe(), coloring_json)));
      },
      py::arg("m"), py::arg("e"), py::arg("coloring"));

  m.def(
      "chi_f_bounds",
      [](const std::string& graph_json, int max_b, std::optional<double> seconds) {
        const Graph g = graph_from_json(graph_json);
        ChiFBounds b;
        {
          py::gil_scoped_release release;
          b = chi_f_bounds(g, max_b, make_budget(seconds, std::nullopt));
        }
        py::dict d;
        d["lower"] = py::make_tuple(b.lower.numerator(), b.lower.denominator());
        d["upper"] = b.upper ? py::object(py::make_tuple(b.upper->numerator(), b.upper->denominator()))
                             : py::object(py::none());
        d["best_a"] = b.best_a;
        d["best_b"] = b.best_b;
        d["exact_per_b"] = b.exact_per_b;
        return d;
      },
      py::arg("graph"), py::arg("max_b") = 4, py::arg("seconds") = py::none());

  m.def("independence_number", [](const std::string& graph_json) {
    return independence_number(graph_from_json(graph_json));
  });
}
