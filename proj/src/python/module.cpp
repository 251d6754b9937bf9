#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ternalg/colour.hpp"
#include "ternalg/dsl.hpp"
#include "ternalg/order3.hpp"
#include "ternalg/paraspace.hpp"
#include "ternalg/suite.hpp"

namespace py = pybind11;
using namespace ternalg;

namespace {

SuperspaceConfig make_config(int dim, const std::string& kappa, int cross_sign) {
  SuperspaceConfig cfg;
  cfg.metric = MetricSignature::minkowski(dim);
  cfg.pairing_kappa = Rational::parse(kappa);
  cfg.cross_sign = cross_sign;
  cfg.validate();
  return cfg;
}

std::string eval_expr(const std::string& expr, int dim, const std::string& kappa, int cross_sign, bool normal,
                      bool apply_star) {
  auto alg = SuperspaceAlgebra::build(make_config(dim, kappa, cross_sign));
  Element value = evaluate(expr, alg);
  if (apply_star) value = star(value);
  return normal ? value.to_string() : render_collapsed(alg, value);
}

std::string run(const std::string& suite, int dim, std::uint64_t seed, const std::string& kappa, int cross_sign,
                int samples) {
  SuiteSpec spec;
  spec.suite = suite;
  spec.dimension = dim;
  spec.seed = seed;
  spec.kappa = Rational::parse(kappa);
  spec.cross_sign = cross_sign;
  spec.oracle_samples = samples;
  std::vector<CheckReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_suite(spec);
  }
  return emit_report(reports, spec, ReportFormat::kJson);
}

std::string check_sc(const std::string& json) {
  auto parts = check_lie_order3_parts(StructureConstants3::from_json(json));
  return emit_report(parts, SuiteSpec{}, ReportFormat::kJson);
}

}  // namespace

PYBIND11_MODULE(ternalg, m) {
  m.doc() = "Exact verification toolkit for the ternary superspace";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      PyErr_SetString(PyExc_ValueError, (std::string(e.what()) + " (line " + std::to_string(e.line()) + ", column " +
                                         std::to_string(e.column()) + ")")
                                            .c_str());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("evaluate", &eval_expr, py::arg("expr"), py::arg("dim") = 4, py::arg("kappa") = "1/2",
        py::arg("cross_sign") = 1, py::arg("normal_form") = false, py::arg("star") = false,
        "Evaluate an expression and return its canonical text.");
  m.def("run_suite", &run, py::arg("suite") = "all", py::arg("dim") = 4, py::arg("seed") = 1,
        py::arg("kappa") = "1/2", py::arg("cross_sign") = 1, py::arg("samples") = 200,
        "Run a verification suite and return the JSON report.");
  m.def("suite_ids", [] { return SuiteSpec::suite_ids(); });
  m.def("dump_factor_csv", [] { return dump_factor_csv(cubic_factor(), GradingGroup(3, 3)); });
  m.def(
      "cubic_poincare_json", [](int dim) { return cubic_poincare(MetricSignature::minkowski(dim)).to_json(); },
      py::arg("dim") = 4);
  m.def("check_structure_constants", &check_sc, py::arg("json"),
        "Check order-three axioms on structure constants given as JSON; returns a JSON report.");
}
