#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>

#include "crossring/drawing.hpp"
#include "crossring/errors.hpp"
#include "crossring/perturb.hpp"
#include "crossring/robustness.hpp"
#include "crossring/solver.hpp"
#include "crossring/verifier.hpp"

namespace py = pybind11;
using namespace crossring;

namespace {

py::object opt_int(const std::optional<int>& x) {
  if (x) return py::int_(*x);
  return py::none();
}

py::dict analyze_dict(const Drawing& d) {
  RobustReport r = analyze(d);
  py::list b, a;
  for (int j = 0; j < r.n; ++j) {
    b.append(opt_int(r.b[j]));
    a.append(opt_int(r.a[j]));
  }
  py::dict out;
  out["digest"] = drawing_digest(d);
  out["m"] = r.m;
  out["n"] = r.n;
  out["total_crossings"] = d.total_crossings();
  out["b"] = b;
  out["a"] = a;
  out["max_gap"] = opt_int(r.max_gap);
  out["red_crossings"] = r.red_crossings;
  out["relaxed"] = r.relaxed;
  out["red_nonseparating"] = r.red_nonseparating;
  out["robust"] = r.robust;
  return out;
}

py::dict bound_dict(int m, int n) {
  BoundResult b = hks_lower_bound(m, n);
  py::dict out;
  out["regime"] = b.regime;
  out["value"] = b.value.str();
  out["numerator"] = b.value.num;
  out["denominator"] = b.value.den;
  out["ceiling"] = b.ceiling();
  return out;
}

}  // namespace

PYBIND11_MODULE(_crossring, m) {
  m.doc() = "drawings of the product of two cycles: analysis, certificates, "
            "exact small-case solver";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<FalsificationError>(m, "FalsificationError");
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<PreconditionError>(m, "PreconditionError");

  py::class_<Drawing>(m, "Drawing")
      .def_property_readonly("m", [](const Drawing& d) { return d.graph.m; })
      .def_property_readonly("n", [](const Drawing& d) { return d.graph.n; })
      .def_property_readonly("crossing_count",
                             [](const Drawing& d) { return d.total_crossings(); })
      .def_property_readonly("digest",
                             [](const Drawing& d) { return drawing_digest(d); })
      .def("to_json", &Drawing::to_json)
      .def_static("from_json", &Drawing::from_json, py::arg("text"))
      .def("validate", &Drawing::validate)
      .def("perturb",
           [](const Drawing& d, std::uint64_t seed) { return perturb(d, seed); },
           py::arg("seed"))
      .def("__repr__", [](const Drawing& d) {
        return "<Drawing " + std::to_string(d.graph.m) + "x" +
               std::to_string(d.graph.n) + " crossings=" +
               std::to_string(d.total_crossings()) + ">";
      });

  m.def("canonical", &canonical_drawing, py::arg("m"), py::arg("n"),
        "reference drawing with (m-2)n crossings");

  m.def("analyze", &analyze_dict, py::arg("drawing"),
        "gap and separation report as a dict");

  m.def("certify_json",
        [](const Drawing& d) { return certificate_json(certify(d)); },
        py::arg("drawing"), "full certificate as a JSON string");

  m.def("exact_crossing_number",
        [](int m, int n, int k_max, std::uint64_t budget) {
          SmallGraph g = product_cycles(m, n);
          return exact_crossing_number(g, k_max,
                                       product_cycle_automorphisms(m, n),
                                       budget);
        },
        py::arg("m"), py::arg("n"), py::arg("k_max"),
        py::arg("budget") = 50000000ull,
        "crossing number of the m x n cycle product, None past k_max",
        py::call_guard<py::gil_scoped_release>());

  m.def("hks_lower_bound", &bound_dict, py::arg("m"), py::arg("n"),
        "strongest proven lower bound with its regime");
}
