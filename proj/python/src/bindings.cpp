#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotpoly/burau.hpp"
#include "knotpoly/harness.hpp"
#include "knotpoly/homfly.hpp"
#include "knotpoly/io.hpp"
#include "knotpoly/kauffman.hpp"
#include "knotpoly/satellite.hpp"

namespace py = pybind11;
using namespace knotpoly;

namespace {

py::int_ to_py(const Integer& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& c) { return Integer(py::cast<std::string>(py::str(static_cast<py::handle>(c)))); }

py::list laurent_terms(const LaurentPoly& p) {
  py::list out;
  for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e, to_py(c)));
  return out;
}

LaurentPoly laurent_from(const std::vector<std::pair<int, py::int_>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, from_py(c));
  return p;
}

py::list poly_terms(const TwoVarPoly& p) {
  py::list out;
  for (const auto& [z, slice] : p.slices())
    for (const auto& [v, c] : slice.terms()) out.append(py::make_tuple(v, z, to_py(c)));
  return out;
}

BraidWord braid_arg(const py::object& b) {
  if (py::isinstance<py::str>(b)) return BraidWord::parse(b.cast<std::string>());
  return b.cast<BraidWord>();
}

Pattern pattern_arg(const py::object& p) {
  if (py::isinstance<Pattern>(p)) return p.cast<Pattern>();
  return Pattern(braid_arg(p));
}

ReportFormat format_arg(const std::string& f) {
  if (f == "json") return ReportFormat::kJson;
  if (f == "md" || f == "markdown") return ReportFormat::kMarkdown;
  throw ParseError("unknown format '" + f + "' (use json or md)");
}

}  // namespace

PYBIND11_MODULE(_knotpoly, m) {
  m.doc() = "Exact HOMFLY, Dubrovnik and Alexander polynomials of closed braids and their cables";

  auto base_error = py::register_exception<Error>(m, "KnotpolyError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base_error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base_error);

  py::class_<BraidWord>(m, "Braid")
      .def(py::init(&BraidWord::parse), py::arg("text"))
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("__len__", &BraidWord::length)
      .def("__str__", &BraidWord::to_string)
      .def("__repr__", [](const BraidWord& b) { return "Braid('" + b.to_string() + "')"; })
      .def(py::self == py::self)
      .def("__mul__", &compose)
      .def("inverse", &inverse)
      .def("is_knot", [](const BraidWord& b) { return is_knot(b); })
      .def("components", [](const BraidWord& b) { return component_count(b); })
      .def("exponent_sum", [](const BraidWord& b) { return exponent_sum(b); });

  py::class_<LaurentPoly>(m, "Laurent")
      .def(py::init(&laurent_from), py::arg("terms"), "From [(exponent, coefficient), ...].")
      .def("terms", &laurent_terms)
      .def("__str__", [](const LaurentPoly& p) { return p.to_string('v'); })
      .def("to_string", &LaurentPoly::to_string, py::arg("var") = 'v')
      .def("__repr__", [](const LaurentPoly& p) { return "Laurent('" + p.to_string('v') + "')"; })
      .def("breadth", [](const LaurentPoly& p) { return breadth(p); })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  py::class_<TwoVarPoly>(m, "Poly")
      .def_static("parse", [](const std::string& s) { return parse_poly(s); })
      .def_static("from_json", [](const std::string& s) { return poly_from_json(s); })
      .def("terms", &poly_terms, "List of (v exponent, z exponent, coefficient).")
      .def("slice", &TwoVarPoly::slice, py::arg("z_degree"))
      .def("truncated", &TwoVarPoly::truncated, py::arg("max_z"))
      .def("v_breadth", &TwoVarPoly::v_breadth)
      .def("json", [](const TwoVarPoly& p) { return poly_to_json(p); })
      .def("__str__", &TwoVarPoly::to_string)
      .def("__repr__", [](const TwoVarPoly& p) { return "Poly('" + p.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const py::object& word, const std::string& name) { return Pattern(braid_arg(word), name); }),
           py::arg("word"), py::arg("name") = "")
      .def_static("trivial", &Pattern::trivial)
      .def_property_readonly("winding", &Pattern::winding)
      .def_property_readonly("word", &Pattern::word)
      .def_property_readonly("name", &Pattern::name)
      .def(py::self == py::self);

  m.def("cable_pattern", &cable_pattern, py::arg("q"), py::arg("f"));

  m.def(
      "homfly",
      [](const py::object& b, bool oracle, std::optional<int> max_z) {
        const BraidWord w = braid_arg(b);
        py::gil_scoped_release release;
        if (oracle) return homfly_oracle(w);
        return max_z ? homfly_truncated(w, *max_z) : homfly(w);
      },
      py::arg("braid"), py::arg("oracle") = false, py::arg("max_z") = py::none());
  m.def(
      "dubrovnik",
      [](const py::object& b, std::size_t max_crossings, bool reverse) {
        const BraidWord w = braid_arg(b);
        py::gil_scoped_release release;
        return dubrovnik(w, max_crossings, reverse ? ResolutionOrder::kReverse : ResolutionOrder::kForward);
      },
      py::arg("braid"), py::arg("max_crossings") = kDefaultDubrovnikBudget, py::arg("reverse") = false);
  m.def("kauffman_f_from_d", &kauffman_F_from_D, py::arg("d"));
  m.def("dubrovnik_from_kauffman_f", &dubrovnik_from_kauffman_F, py::arg("f"));
  m.def(
      "alexander",
      [](const py::object& b) {
        const BraidWord w = braid_arg(b);
        py::gil_scoped_release release;
        return alexander(w);
      },
      py::arg("braid"));
  m.def("alexander_from_homfly", &alexander_from_homfly, py::arg("p"));
  m.def(
      "cable",
      [](const py::object& b, const py::object& p) { return cable(braid_arg(b), pattern_arg(p)); },
      py::arg("braid"), py::arg("pattern"));

  m.def(
      "moments", [](const LaurentPoly& f, std::size_t count) {
        py::list out;
        for (const Integer& x : moments(f, count)) out.append(to_py(x));
        return out;
      },
      py::arg("f"), py::arg("count"));
  m.def(
      "reconstruct",
      [](const std::vector<int>& support, const std::vector<py::int_>& values) {
        std::vector<Integer> mom;
        for (const auto& v : values) mom.push_back(from_py(v));
        return reconstruct(support, mom);
      },
      py::arg("support"), py::arg("moments"));
  m.def("h_invariants", [](const TwoVarPoly& p, int j, std::size_t count) {
        py::list out;
        for (const Integer& x : h_invariants(p, j, count)) out.append(to_py(x));
        return out;
      },
      py::arg("p"), py::arg("j"), py::arg("count"));

  py::class_<ExperimentReport>(m, "Report")
      .def_property_readonly("passed", [](const ExperimentReport& r) { return r.verdict() == Verdict::kPass; })
      .def_property_readonly("verdict", [](const ExperimentReport& r) {
        return r.verdict() == Verdict::kPass ? "PASS" : "FALSIFIED";
      })
      .def_readonly("kind", &ExperimentReport::kind)
      .def_readonly("negative_control", &ExperimentReport::negative_control)
      .def("all_distinct", &ExperimentReport::all_distinct)
      .def(
          "render",
          [](const ExperimentReport& r, const std::string& format, bool timing) {
            return render_report(r, format_arg(format), timing);
          },
          py::arg("format") = "json", py::arg("timing") = true);

  m.def(
      "run_experiment",
      [](const std::string& config_json, std::optional<int> jobs) {
        ExperimentConfig cfg = config_from_json(config_json);
        if (jobs) cfg.jobs = *jobs;
        py::gil_scoped_release release;
        return verify_cable_coefficients(cfg);
      },
      py::arg("config_json"), py::arg("jobs") = py::none());
  m.def(
      "verify_trivial_cables",
      [](int p_max, int N, int family_size, int jobs) {
        py::gil_scoped_release release;
        return verify_trivial_cables(p_max, N, family_size, jobs);
      },
      py::arg("p_max"), py::arg("N") = 0, py::arg("family_size") = 1, py::arg("jobs") = 1);
  m.def(
      "verify_moment_determination",
      [](const py::object& k, const py::object& k_prime) {
        const BraidWord a = braid_arg(k);
        const BraidWord b = braid_arg(k_prime);
        py::gil_scoped_release release;
        return verify_moment_determination(a, b);
      },
      py::arg("k"), py::arg("k_prime"));
}
