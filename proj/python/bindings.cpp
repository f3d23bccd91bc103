#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wdrd/cli.hpp"
#include "wdrd/io.hpp"

namespace py = pybind11;
using namespace wdrd;

namespace {

py::tuple pair_tuple(DistancePair p) {
  auto side = [](int v) -> py::object {
    if (v == kUnreachable) return py::none();
    return py::int_(v);
  };
  return py::make_tuple(side(p.forward), side(p.backward));
}

py::list labels_list(const std::vector<DistancePair>& labels) {
  py::list out;
  for (auto p : labels) out.append(pair_tuple(p));
  return out;
}

FiberKind fiber_kind(const std::string& name) {
  if (name == "complete") return FiberKind::complete;
  if (name == "empty") return FiberKind::empty;
  throw py::value_error("fiber kind must be 'complete' or 'empty'");
}

py::dict report_dict(const ClassificationReport& r) {
  py::dict out;
  out["verdict"] = to_string(r.verdict);
  out["found"] = r.found;
  std::vector<PositionSet> predicted;
  std::vector<std::string> cases;
  for (const auto& c : r.predicted) {
    predicted.push_back(c.positions);
    cases.push_back(c.case_tag ? to_string(*c.case_tag) : "none");
  }
  out["predicted"] = predicted;
  out["cases"] = cases;
  out["found_not_predicted"] = r.found_not_predicted;
  out["predicted_not_found"] = r.predicted_not_found;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weakly distance-regular digraphs and P-polynomial association schemes";

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& arcs) {
             std::vector<Arc> list;
             for (auto [u, v] : arcs) list.push_back({u, v});
             return Digraph::from_arcs(n, list);
           }),
           py::arg("n"), py::arg("arcs"))
      .def_property_readonly("size", &Digraph::size)
      .def("has_arc", &Digraph::has_arc)
      .def("arcs",
           [](const Digraph& g) {
             std::vector<std::pair<int, int>> out;
             for (auto [u, v] : g.arcs()) out.emplace_back(u, v);
             return out;
           })
      .def("girth", [](const Digraph& g) { return girth(g); })
      .def("is_strongly_connected", [](const Digraph& g) { return is_strongly_connected(g); })
      .def("is_undirected", [](const Digraph& g) { return is_undirected(g); })
      .def("two_way_distance", [](const Digraph& g, int x, int y) { return pair_tuple(two_way_distance(g, x, y)); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.size()) + ", arcs=" + std::to_string(g.arc_count()) + ")";
      });

  m.def("directed_cycle", &directed_cycle, py::arg("n"));
  m.def(
      "circulant", [](int n, const std::vector<int>& steps) { return circulant(n, steps); }, py::arg("n"),
      py::arg("steps"));
  m.def(
      "lex_product",
      [](const Digraph& base, int copies, const std::string& kind) { return lex_product(base, copies, fiber_kind(kind)); },
      py::arg("base"), py::arg("m"), py::arg("kind"));
  m.def("parse_digraph", [](const std::string& text) { return parse_digraph(text); });
  m.def("format_digraph", &format_digraph);

  py::class_<AssociationScheme>(m, "AssociationScheme")
      .def_property_readonly("points", &AssociationScheme::points)
      .def_property_readonly("d", &AssociationScheme::d)
      .def("p", &AssociationScheme::p, py::arg("h"), py::arg("i"), py::arg("j"))
      .def("valency", &AssociationScheme::valency)
      .def("star", &AssociationScheme::star)
      .def("label", &AssociationScheme::label)
      .def("is_commutative", [](const AssociationScheme& s) { return is_commutative(s); });

  py::class_<Ordering>(m, "Ordering")
      .def(py::init<std::vector<int>>(), py::arg("classes"))
      .def_static("identity", &Ordering::identity)
      .def_property_readonly("d", &Ordering::d)
      .def_property_readonly("classes", &Ordering::classes)
      .def("__eq__", [](const Ordering& a, const Ordering& b) { return a == b; })
      .def("__repr__", [](const Ordering& o) { return "Ordering([" + to_string(o.classes()) + "])"; });

  py::class_<PPolyProfile>(m, "PPolyProfile")
      .def_readonly("ordering", &PPolyProfile::ordering)
      .def_readonly("girth", &PPolyProfile::girth)
      .def_readonly("d", &PPolyProfile::d)
      .def_property_readonly("type", [](const PPolyProfile& p) { return std::string(to_string(p.type)); })
      .def_readonly("stable", &PPolyProfile::stable)
      .def_readonly("k1", &PPolyProfile::k1)
      .def_readonly("kg", &PPolyProfile::kg);

  m.def(
      "attached_scheme",
      [](const Digraph& g, int jobs) -> py::dict {
        BuildOptions options;
        options.jobs = jobs;
        auto result = attached_scheme(g, options);
        py::dict out;
        if (auto* ok = std::get_if<AttachedScheme>(&result)) {
          out["scheme"] = py::cast(std::move(ok->scheme));
          out["labels"] = labels_list(ok->labels);
          out["violation"] = py::none();
        } else {
          auto& bad = std::get<WdrdViolation>(result);
          out["scheme"] = py::none();
          out["labels"] = labels_list(bad.labels);
          out["violation"] = format_violation(bad.violation, bad.labels);
        }
        return out;
      },
      py::arg("digraph"), py::arg("jobs") = 0,
      "Returns a dict with 'scheme', 'labels' and 'violation' (None on success).");
  m.def(
      "is_weakly_distance_regular", [](const Digraph& g, int jobs) { return is_weakly_distance_regular(g, jobs); },
      py::arg("digraph"), py::arg("jobs") = 0);

  m.def(
      "is_p_polynomial",
      [](const AssociationScheme& s, const Ordering& o) -> py::object {
        auto result = is_p_polynomial(s, o);
        if (auto* p = std::get_if<PPolyProfile>(&result)) return py::cast(*p);
        return py::none();
      },
      "Profile of an accepted ordering, else None.");
  m.def(
      "find_p_poly_orderings", [](const AssociationScheme& s, int jobs) { return find_p_poly_orderings(s, jobs); },
      py::arg("scheme"), py::arg("jobs") = 0);
  m.def("theorem_menu", [](const PPolyProfile& p) {
    std::vector<std::pair<PositionSet, std::string>> out;
    for (const auto& c : theorem_menu(p)) out.emplace_back(c.positions, c.case_tag ? to_string(*c.case_tag) : "none");
    return out;
  });
  m.def(
      "enumerate_valid_unions",
      [](const AssociationScheme& s, const Ordering& o, int jobs) {
        EnumerateOptions options;
        options.jobs = jobs;
        return enumerate_valid_unions(s, o, options).found;
      },
      py::arg("scheme"), py::arg("ordering"), py::arg("jobs") = 0);
  m.def(
      "verify_theorem",
      [](const AssociationScheme& s, const Ordering& o, int jobs) {
        EnumerateOptions options;
        options.jobs = jobs;
        return report_dict(verify_theorem(s, o, options));
      },
      py::arg("scheme"), py::arg("ordering"), py::arg("jobs") = 0);
  m.def("check_lemmas", [](const AssociationScheme& s, const PPolyProfile& p) {
    std::vector<py::dict> out;
    for (const auto& r : check_lemmas(s, p).results) {
      py::dict row;
      row["check"] = to_string(r.id);
      row["status"] = to_string(r.status);
      row["witness"] = r.witness ? py::cast(*r.witness) : py::none();
      out.push_back(row);
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
