#include "ternalg/suite.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ternalg/colour.hpp"
#include "ternalg/oracle.hpp"
#include "ternalg/order3.hpp"

namespace ternalg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kReportVersion = "1.0";

// ---------------------------------------------------------------------------
// arith

Cyclo random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

std::vector<CheckReport> arith_checks(const SuiteSpec& spec) {
  std::vector<CheckReport> out;
  const Cyclo q = Cyclo::q(), one(1);
  {
    CheckReport rep("arith.q_identities", "q^3 = 1; 1 + q + q^2 = 0; conj(q) = q^2; norm(q) = 1");
    ScopedTimer timer(rep);
    auto expect = [&](const char* what, bool ok) {
      ++rep.instances;
      if (!ok) rep.add_residual(what, "violated");
    };
    expect("q^3 = 1", q * q * q == one);
    expect("1 + q + q^2 = 0", (one + q + q * q).is_zero());
    expect("q*q = q2()", q * q == Cyclo::q2());
    expect("conj(q) = q^2", q.conj() == Cyclo::q2());
    expect("norm(q) = 1", q.norm() == Rational(1));
    expect("q^-1 = q^2", q.inverse() == Cyclo::q2());
    timer.stop();
    out.push_back(std::move(rep));
  }
  std::mt19937_64 rng(spec.seed);
  {
    CheckReport rep("arith.field_axioms",
                    "(ab)c = a(bc); ab = ba; a(b+c) = ab+ac; a a^-1 = 1 for seeded random a, b, c in Q(q)");
    ScopedTimer timer(rep);
    for (int k = 0; k < 1000; ++k) {
      Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
      rep.instances += 4;
      const std::string where = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
      if ((a * b) * c != a * (b * c)) rep.add_residual(where, "associativity");
      if (a * b != b * a) rep.add_residual(where, "commutativity");
      if (a * (b + c) != a * b + a * c) rep.add_residual(where, "distributivity");
      if (!a.is_zero() && !(a * a.inverse()).is_one()) rep.add_residual(where, "inverse");
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("arith.conjugation_norm",
                    "conj(conj a) = a; conj(ab) = conj a conj b; norm(ab) = norm a norm b; a conj(a) = norm a");
    ScopedTimer timer(rep);
    for (int k = 0; k < 1000; ++k) {
      Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
      rep.instances += 4;
      const std::string where = "a=" + a.to_string() + " b=" + b.to_string();
      if (a.conj().conj() != a) rep.add_residual(where, "conj involution");
      if ((a * b).conj() != a.conj() * b.conj()) rep.add_residual(where, "conj multiplicative");
      if ((a * b).norm() != a.norm() * b.norm()) rep.add_residual(where, "norm multiplicative");
      if (a * a.conj() != Cyclo(a.norm())) rep.add_residual(where, "a conj(a) = norm");
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("arith.rational_promotion", "exact results beyond 64 bits: (2^62)^2 / 2^62 = 2^62, (2^63-1)+1-1 round trip");
    ScopedTimer timer(rep);
    const Rational big(std::int64_t{1} << 62);
    const Rational sq = big * big;
    rep.instances += 3;
    if (sq.to_string() != "21267647932558653966460912964485513216") rep.add_residual("(2^62)^2", sq.to_string());
    if (sq / big != big) rep.add_residual("(2^62)^2 / 2^62", (sq / big).to_string());
    const Rational top(std::numeric_limits<std::int64_t>::max());
    if ((top + Rational(1)) - Rational(1) != top) rep.add_residual("(2^63-1)+1-1", ((top + Rational(1)) - Rational(1)).to_string());
    timer.stop();
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// engine

Element random_full_element(const SuperspaceAlgebra& alg, std::mt19937_64& rng, int max_degree, int max_terms) {
  const auto& sys = alg.system();
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<int> length(0, max_degree);
  std::uniform_int_distribution<std::size_t> letter(0, sys->size() - 1);
  std::uniform_int_distribution<int> small(-3, 3);
  Element e(sys);
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial::Storage w;
    const int len = length(rng);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<std::uint8_t>(letter(rng)));
    Cyclo c;
    while (c.is_zero()) c = Cyclo(Rational(small(rng)), Rational(small(rng)));
    e.add_term(Monomial(std::move(w)), c);
  }
  return e;
}

std::vector<CheckReport> engine_checks(const SuiteSpec& spec, const SuperspaceAlgebra& alg) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
  const int n = spec.engine_samples;
  {
    CheckReport rep("engine.normal_form_idempotent", "NF(NF(e)) = NF(e) and NF(e) is ordered, for seeded random e of degree <= 5");
    ScopedTimer timer(rep);
    for (int k = 0; k < n; ++k) {
      ++rep.instances;
      Element e = random_full_element(alg, rng, 5, 4);
      Element nf = normal_form(e);
      if (normal_form(nf).terms() != nf.terms() || !nf.is_normal()) rep.add_residual("sample " + std::to_string(k), e.to_string());
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("engine.confluence",
                    "leftmost, rightmost and random single-step reduction agree with NF(e), for seeded random e of degree <= 5");
    ScopedTimer timer(rep);
    for (int k = 0; k < n; ++k) {
      ++rep.instances;
      Element e = random_full_element(alg, rng, 5, 4);
      Element nf = normal_form(e);
      const auto& want = nf.terms();
      if (reduce_with_strategy(e, Strategy::kLeftmost).terms() != want)
        rep.add_residual("sample " + std::to_string(k) + " leftmost", e.to_string());
      if (reduce_with_strategy(e, Strategy::kRightmost).terms() != want)
        rep.add_residual("sample " + std::to_string(k) + " rightmost", e.to_string());
      if (reduce_with_strategy(e, Strategy::kRandom, spec.seed + static_cast<std::uint64_t>(k)).terms() != want)
        rep.add_residual("sample " + std::to_string(k) + " random", e.to_string());
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("engine.associativity", "(a b) c = a (b c) for seeded random a, b, c");
    ScopedTimer timer(rep);
    for (int k = 0; k < n; ++k) {
      ++rep.instances;
      Element a = random_full_element(alg, rng, 2, 3), b = random_full_element(alg, rng, 2, 3),
              c = random_full_element(alg, rng, 2, 3);
      if ((a * b) * c != a * (b * c)) rep.add_residual("sample " + std::to_string(k), a.to_string());
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("engine.star_laws",
                    "star(star a) = a; star(a b) = star(b) star(a); star(z a) = conj(z) star(a); star(a + b) = star a + star b");
    ScopedTimer timer(rep);
    for (int k = 0; k < n; ++k) {
      rep.instances += 4;
      Element a = random_full_element(alg, rng, 3, 3), b = random_full_element(alg, rng, 3, 3);
      Cyclo z = random_cyclo(rng);
      const std::string where = "sample " + std::to_string(k);
      if (star(star(a)) != a) rep.add_residual(where + " involution", a.to_string());
      if (star(a * b) != star(b) * star(a)) rep.add_residual(where + " anti-multiplicative", a.to_string());
      if (star(z * a) != z.conj() * star(a)) rep.add_residual(where + " antilinear", a.to_string());
      if (star(a + b) != star(a) + star(b)) rep.add_residual(where + " additive", a.to_string());
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("engine.sym3_invariance", "sym3(a,b,c) is invariant under all permutations of a, b, c");
    ScopedTimer timer(rep);
    for (int k = 0; k < n; ++k) {
      Element a = random_full_element(alg, rng, 2, 2), b = random_full_element(alg, rng, 2, 2),
              c = random_full_element(alg, rng, 2, 2);
      std::array<const Element*, 3> p{&a, &b, &c};
      const Element ref = sym3(a, b, c);
      std::sort(p.begin(), p.end());
      do {
        ++rep.instances;
        if (sym3(*p[0], *p[1], *p[2]) != ref) rep.add_residual("sample " + std::to_string(k), a.to_string());
      } while (std::next_permutation(p.begin(), p.end()));
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// order3

std::vector<CheckReport> order3_checks(const SuiteSpec& spec) {
  std::vector<CheckReport> out;
  std::vector<int> dims{2, 3, 4, 5};
  if (std::find(dims.begin(), dims.end(), spec.dimension) == dims.end()) dims.push_back(spec.dimension);
  for (int d : dims) {
    CheckReport rep = check_lie_order3(cubic_poincare(MetricSignature::minkowski(d)));
    rep.check_id = "order3.cubic_poincare.d" + std::to_string(d);
    out.push_back(std::move(rep));
  }
  {
    MetricSignature euclid;
    euclid.dimension = 3;
    euclid.eta = {1, 1, 1};
    CheckReport rep = check_lie_order3(cubic_poincare(euclid));
    rep.check_id = "order3.cubic_poincare.euclidean_d3";
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep = check_lie_order3(StructureConstants3(3, 2));
    rep.check_id = "order3.abelian";
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.corruptions_detected",
                    "each corrupted cubic Poincare instance fails exactly the violated part with a localized residual");
    ScopedTimer timer(rep);
    const auto base = cubic_poincare(MetricSignature::minkowski(4));
    const int p3 = base.dim0() - 1;
    const int l01 = lorentz_index(4, 0, 1);
    struct Case {
      std::string name, part;
      StructureConstants3 sc;
    };
    std::vector<Case> cases;
    {
      auto sc = base;
      sc.Q(0, 1, 1, p3) += Rational(1);
      cases.push_back({"Q_011^P3 += 1", "storage", sc});
    }
    {
      auto sc = base;
      sc.set_f(lorentz_index(4, 0, 1), lorentz_index(4, 0, 2), lorentz_index(4, 1, 2),
               sc.f(lorentz_index(4, 0, 1), lorentz_index(4, 0, 2), lorentz_index(4, 1, 2)) + Rational(1));
      cases.push_back({"f_{L01,L02}^{L12} += 1 (antisymmetric)", "jacobi", sc});
    }
    {
      auto sc = base;
      sc.Q(0, 0, 0, l01) += Rational(1);
      cases.push_back({"Q_000^L01 += 1", "fundamental", sc});
    }
    for (const auto& c : cases) {
      ++rep.instances;
      bool hit = false;
      std::string first;
      for (const auto& part : check_lie_order3_parts(c.sc))
        if (part.check_id == "order3." + c.part && !part.passed()) {
          hit = true;
          first = part.residuals.front().indices;
        }
      if (!hit)
        rep.add_residual(c.name, "corruption not detected by the " + c.part + " check");
      else
        rep.note(c.name + ": " + c.part + " fails first at " + first);
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.json_roundtrip", "from_json(to_json(sc)) = sc for cubic Poincare, d = 2..5");
    ScopedTimer timer(rep);
    for (int d = 2; d <= 5; ++d) {
      ++rep.instances;
      auto sc = cubic_poincare(MetricSignature::minkowski(d));
      if (!(StructureConstants3::from_json(sc.to_json()) == sc)) rep.add_residual("d=" + std::to_string(d), "differs");
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> poincare_checks(const SuperspaceAlgebra& alg) {
  std::vector<CheckReport> out = check_poincare_realisation(alg);
  const auto sc = cubic_poincare(alg.config().metric);
  out.push_back(check_against_superspace(sc, alg));
  {
    CheckReport rep("poincare.metric_flip_detected",
                    "structure constants built with -eta disagree with the superspace realisation built with eta");
    ScopedTimer timer(rep);
    MetricSignature flipped = alg.config().metric;
    for (int& e : flipped.eta) e = -e;
    ++rep.instances;
    CheckReport cross = check_against_superspace(cubic_poincare(flipped), alg);
    if (cross.passed() && alg.dimension() >= 2) rep.add_residual("flipped metric", "no mismatch reported");
    rep.note(std::to_string(cross.residual_total) + " mismatching brackets");
    timer.stop();
    out.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// colour

std::vector<CheckReport> colour_checks() {
  std::vector<CheckReport> out;
  out.push_back(check_axioms(cubic_factor(), GradingGroup(3, 3)));
  {
    CheckReport rep = check_axioms(trivial_factor(), GradingGroup(3, 2));
    rep.check_id = "colour.axioms_trivial_factor";
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("colour.counterexample_detected", "N(a,b) = q^(a1 b1) violates N(a,b)N(b,a) = 1");
    ScopedTimer timer(rep);
    CommutationFactor bad = [](const GradeVector& a, const GradeVector& b) { return Cyclo::q_pow(a[0] * b[0]); };
    ++rep.instances;
    CheckReport r = check_axioms(bad, GradingGroup(3, 3));
    const bool axiom1 = std::any_of(r.residuals.begin(), r.residuals.end(),
                                    [](const Residual& x) { return x.indices.rfind("axiom1", 0) == 0; });
    if (!axiom1) rep.add_residual("q^(a1 b1)", "axiom 1 violation not reported");
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("colour.weights", "weights for V1V2V3, V2V3V1, V3V1V2, V1V3V2, V2V1V3, V3V2V1 = (1, q^2, q^2, q, q, 1)");
    ScopedTimer timer(rep);
    auto g = unit_grades();
    const Weights6 w = colour_weights(cubic_factor(), g[0], g[1], g[2]);
    const Weights6 want{Cyclo(1), Cyclo::q2(), Cyclo::q2(), Cyclo::q(), Cyclo::q(), Cyclo(1)};
    static const std::array<const char*, 6> kOrder{"123", "231", "312", "132", "213", "321"};
    for (std::size_t k = 0; k < 6; ++k) {
      ++rep.instances;
      if (w[k] != want[k]) rep.add_residual(kOrder[k], w[k].to_string());
    }
    ++rep.instances;
    Cyclo sum;
    for (const auto& x : w) sum += x;
    if (!sum.is_zero()) rep.add_residual("sum of weights", sum.to_string());
    ++rep.instances;
    if (w[5] != w[4] * cubic_factor()(g[0], g[2]) * cubic_factor()(g[1], g[2]))
      rep.add_residual("w(321) = w(213) N(g1,g3) N(g2,g3)", w[5].to_string());
    const GradeVector zero({0, 0, 0}, 3);
    const Weights6 flat = colour_weights(cubic_factor(), zero, zero, zero);
    for (std::size_t k = 0; k < 6; ++k) {
      ++rep.instances;
      if (!flat[k].is_one()) rep.add_residual(std::string("zero grades ") + kOrder[k], flat[k].to_string());
    }
    timer.stop();
    out.push_back(std::move(rep));
  }
  return out;
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

std::string status(const CheckReport& r) { return r.passed() ? "pass" : "fail"; }

}  // namespace

const std::vector<std::string>& SuiteSpec::suite_ids() {
  static const std::vector<std::string> kIds{"arith",    "engine", "para",       "roby",    "poincare", "order3",
                                             "colour",   "superspace", "closure", "oracle", "all"};
  return kIds;
}

void SuiteSpec::validate() const {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), suite) == ids.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (engine_samples < 0 || oracle_samples < 0) throw std::invalid_argument("sample counts must be nonnegative");
  config().validate();
}

SuperspaceConfig SuiteSpec::config() const {
  SuperspaceConfig c;
  c.metric = MetricSignature::minkowski(dimension);
  c.pairing_kappa = kappa;
  c.cross_sign = cross_sign;
  return c;
}

std::vector<CheckReport> run_suite(const SuiteSpec& spec) {
  spec.validate();
  const auto alg = SuperspaceAlgebra::build(spec.config());
  auto want = [&](const char* id) { return spec.suite == "all" || spec.suite == id; };
  std::vector<CheckReport> out;
  if (want("arith")) append(out, arith_checks(spec));
  if (want("engine")) append(out, engine_checks(spec, alg));
  if (want("para")) append(out, check_parafermion_relations(alg));
  if (want("roby")) out.push_back(check_roby(alg));
  if (want("poincare")) append(out, poincare_checks(alg));
  if (want("order3")) append(out, order3_checks(spec));
  if (want("colour")) append(out, colour_checks());
  if (want("superspace")) {
    out.push_back(check_psi_bracket(alg));
    append(out, check_transformations(alg));
  }
  if (want("closure")) append(out, check_closure(alg));
  if (want("oracle")) {
    OracleSweepOptions o;
    o.samples = spec.oracle_samples;
    o.seed = spec.seed;
    append(out, run_oracle_sweep(alg, o));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

std::string emit_report(const std::vector<CheckReport>& reports, const SuiteSpec& spec, ReportFormat format) {
  const SuperspaceConfig cfg = spec.config();
  if (format == ReportFormat::kJson) {
    ordered_json doc;
    doc["version"] = kReportVersion;
    doc["config"] = {{"dimension", cfg.metric.dimension},
                     {"metric", cfg.metric.eta},
                     {"kappa", cfg.pairing_kappa.to_string()},
                     {"cross_sign", cfg.cross_sign},
                     {"seed", spec.seed}};
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json residuals = ordered_json::array();
      for (const auto& x : r.residuals) residuals.push_back({{"indices", x.indices}, {"element", x.element}});
      checks.push_back({{"check_id", r.check_id},
                        {"paper_ref", r.paper_ref},
                        {"status", status(r)},
                        {"residuals", residuals},
                        {"residual_total", r.residual_total},
                        {"instances", r.instances},
                        {"notes", r.notes},
                        {"elapsed_ms", r.elapsed_ms}});
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "ternalg report v" << kReportVersion << "  d=" << cfg.metric.dimension << " metric=" << cfg.metric.to_string()
     << " kappa=" << cfg.pairing_kappa << " cross_sign=" << cfg.cross_sign << " seed=" << spec.seed << "\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    os << (r.passed() ? "PASS " : "FAIL ") << r.check_id << "  (" << r.instances << " instances)\n";
    os << "     " << r.paper_ref << "\n";
    for (const auto& x : r.residuals) os << "     residual " << x.indices << ": " << x.element << "\n";
    if (r.residual_total > r.residuals.size())
      os << "     ... " << (r.residual_total - r.residuals.size()) << " more residuals\n";
    for (const auto& n : r.notes) os << "     note: " << n << "\n";
  }
  os << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
  return os.str();
}

ReportDocument parse_report(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ReportDocument r;
    r.version = doc.at("version").get<std::string>();
    const auto& cfg = doc.at("config");
    r.dimension = cfg.at("dimension").get<int>();
    r.metric = cfg.at("metric").get<std::vector<int>>();
    r.kappa = cfg.at("kappa").get<std::string>();
    r.cross_sign = cfg.at("cross_sign").get<int>();
    r.seed = cfg.at("seed").get<std::uint64_t>();
    for (const auto& c : doc.at("checks")) {
      CheckReport rep(c.at("check_id").get<std::string>(), c.at("paper_ref").get<std::string>());
      for (const auto& x : c.at("residuals"))
        rep.residuals.push_back({x.at("indices").get<std::string>(), x.at("element").get<std::string>()});
      rep.residual_total = c.value("residual_total", rep.residuals.size());
      rep.instances = c.value("instances", std::size_t{0});
      rep.notes = c.value("notes", std::vector<std::string>{});
      rep.elapsed_ms = c.at("elapsed_ms").get<double>();
      const std::string st = c.at("status").get<std::string>();
      if (st != (rep.passed() ? "pass" : "fail"))
        throw std::invalid_argument("report: status of " + rep.check_id + " contradicts its residuals");
      r.checks.push_back(std::move(rep));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

}  // namespace ternalg
