// ternalg: verification suites and expression evaluation for the ternary superspace.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ternalg/colour.hpp"
#include "ternalg/dsl.hpp"
#include "ternalg/order3.hpp"
#include "ternalg/paraspace.hpp"
#include "ternalg/suite.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

const char* kNames = R"(Names:
  theta^m  theta  theta_m     parafermionic coordinates (theta_m lowered with eta)
  d_m                         parafermionic derivatives
  eps1^m .. eps3^m, eps1_m .. parameters (upper and lowered)
  x^m  x_m  P_m               bosonic coordinates and momenta, [P_m, x^n] = delta
  J_{mn}  L_{mn}              Lorentz generators (spin part, full)
  V_1 V_2 V_3                 ternary translations
  psi+_m  psi-_m              theta_m +/- d_m
  <name>[1], <name>[2]        single Green components of a parafermion
  q                           primitive cube root of unity
Brackets: [a,b]  {a,b,c}  cbr(g1,g2,g3; a,b,c[; target])  star(e)  act(a,b,...; target)
Complex scalars are parenthesised: (1+2*q)*theta^0)";

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

ternalg::Rational parse_kappa(const std::string& s) {
  auto k = ternalg::Rational::parse(s);
  if (k.is_zero()) throw std::invalid_argument("kappa must be nonzero");
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary superspace verification toolkit"};
  app.require_subcommand(1);
  app.footer(kNames);

  ternalg::SuiteSpec spec;
  std::string report_format = "text", out_path, kappa = "1/2";

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit status 0 iff every check passes");
  verify->add_option("--suite", spec.suite, "suite id")
      ->check(CLI::IsMember(ternalg::SuiteSpec::suite_ids()))
      ->default_val("all");
  verify->add_option("--dim", spec.dimension, "spacetime dimension (Minkowski metric)")->check(CLI::Range(1, 9));
  verify->add_option("--seed", spec.seed, "seed for randomized checks");
  verify->add_option("--report", report_format, "report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to a file");
  verify->add_option("--kappa", kappa, "theta/d pairing constant");
  verify->add_option("--cross-sign", spec.cross_sign, "swap sign between Green sectors")->check(CLI::IsMember({1, -1}));
  verify->add_option("--samples", spec.oracle_samples, "random samples per oracle subsystem");

  std::string expr;
  bool normal = false, apply_star = false;
  int eval_dim = 4;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", expr, "expression")->required();
  eval->add_flag("--normal-form", normal, "print the canonical normal form over Green components");
  eval->add_flag("--star", apply_star, "apply the star involution before printing");
  eval->add_option("--dim", eval_dim, "spacetime dimension")->check(CLI::Range(1, 9));
  eval->add_option("--kappa", kappa, "theta/d pairing constant");
  eval->add_option("--cross-sign", spec.cross_sign, "swap sign between Green sectors")->check(CLI::IsMember({1, -1}));

  bool csv = false;
  auto* dump = app.add_subcommand("dump-factor", "print the commutation factor on Z_3^3 as exponents of q");
  dump->add_flag("--csv", csv, "CSV output")->required();
  dump->add_option("--out", out_path, "output file");

  std::string instance;
  int sc_dim = 4;
  auto* export_sc = app.add_subcommand("export-sc", "export structure constants as JSON");
  export_sc->add_option("--instance", instance, "instance name")->required()->check(CLI::IsMember({"cubic-poincare"}));
  export_sc->add_option("--dim", sc_dim, "spacetime dimension")->check(CLI::Range(1, 9));
  export_sc->add_option("--out", out_path, "output file");

  std::string sc_path;
  auto* check_sc = app.add_subcommand("check-sc", "check order-three axioms on structure constants read from JSON");
  check_sc->add_option("file", sc_path, "JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      spec.kappa = parse_kappa(kappa);
      auto reports = ternalg::run_suite(spec);
      auto fmt = report_format == "json" ? ternalg::ReportFormat::kJson : ternalg::ReportFormat::kText;
      write_out(ternalg::emit_report(reports, spec, fmt), out_path);
      if (!out_path.empty() && out_path != "-") {
        std::size_t passed = 0;
        for (const auto& r : reports) passed += r.passed();
        std::cerr << passed << "/" << reports.size() << " checks passed\n";
      }
      return ternalg::all_passed(reports) ? 0 : kExitFailed;
    }
    if (*eval) {
      ternalg::SuperspaceConfig cfg;
      cfg.metric = ternalg::MetricSignature::minkowski(eval_dim);
      cfg.pairing_kappa = parse_kappa(kappa);
      cfg.cross_sign = spec.cross_sign;
      auto alg = ternalg::SuperspaceAlgebra::build(cfg);
      auto value = ternalg::evaluate(expr, alg);
      if (apply_star) value = ternalg::star(value);
      std::cout << (normal ? value.to_string() : ternalg::render_collapsed(alg, value)) << "\n";
      return 0;
    }
    if (*dump) {
      write_out(ternalg::dump_factor_csv(ternalg::cubic_factor(), ternalg::GradingGroup(3, 3)), out_path);
      return 0;
    }
    if (*export_sc) {
      write_out(ternalg::cubic_poincare(ternalg::MetricSignature::minkowski(sc_dim)).to_json() + "\n", out_path);
      return 0;
    }
    if (*check_sc) {
      std::ifstream f(sc_path);
      std::stringstream buf;
      buf << f.rdbuf();
      auto sc = ternalg::StructureConstants3::from_json(buf.str());
      auto parts = ternalg::check_lie_order3_parts(sc);
      ternalg::SuiteSpec shown;
      std::cout << ternalg::emit_report(parts, shown, ternalg::ReportFormat::kText);
      return ternalg::all_passed(parts) ? 0 : kExitFailed;
    }
  } catch (const ternalg::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
