#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "ternalg/colour.hpp"
#include "ternalg/paraspace.hpp"

using namespace ternalg;

namespace {

SuperspaceAlgebra make(int d, Rational kappa = Rational(1, 2), int cross_sign = 1) {
  SuperspaceConfig cfg;
  cfg.metric = MetricSignature::minkowski(d);
  cfg.pairing_kappa = kappa;
  cfg.cross_sign = cross_sign;
  return SuperspaceAlgebra::build(cfg);
}

int delta(int a, int b) { return a == b ? 1 : 0; }

Cyclo c(int v) { return Cyclo(v); }

// Lorentz action on a lower vector index: L_mn v_r = eta_nr v_m - eta_mr v_n.
Element vector_action(const SuperspaceAlgebra& alg, int m, int n, int r, const auto& v) {
  return c(alg.eta(n, r)) * v(m) - c(alg.eta(m, r)) * v(n);
}

// [L_mn, L_rs] = eta_nr L_ms - eta_mr L_ns + eta_ns L_rm - eta_ms L_rn.
Element lorentz_bracket(const SuperspaceAlgebra& alg, int m, int n, int r, int s) {
  auto L = [&](int a, int b) { return lorentz_generator(alg, a, b); };
  return c(alg.eta(n, r)) * L(m, s) - c(alg.eta(m, r)) * L(n, s) + c(alg.eta(n, s)) * L(r, m) -
         c(alg.eta(m, s)) * L(r, n);
}

const Weights6 kCol3{Cyclo(1), Cyclo::q2(), Cyclo::q2(), Cyclo::q(), Cyclo::q(), Cyclo(1)};

}  // namespace

TEST(Build, NameCounts) {
  auto alg = make(4);
  EXPECT_EQ(alg.para_names().size(), 21u);
  EXPECT_EQ(alg.theta_type_names().size(), 17u);
  EXPECT_EQ(alg.system()->size(), 42u + 8u);
  auto alg2 = make(2);
  EXPECT_EQ(alg2.para_names().size(), 11u);
}

TEST(Build, MetricAndConfigValidation) {
  EXPECT_EQ(MetricSignature::minkowski(4).eta, (std::vector<int>{1, -1, -1, -1}));
  SuperspaceConfig bad;
  bad.cross_sign = 0;
  EXPECT_THROW(SuperspaceAlgebra::build(bad), std::invalid_argument);
  bad.cross_sign = 1;
  bad.pairing_kappa = Rational(0);
  EXPECT_THROW(SuperspaceAlgebra::build(bad), std::invalid_argument);
}

TEST(Build, GreenAnsatz) {
  auto alg = make(3);
  for (const auto& n : alg.para_names()) {
    Element sum = Element::generator(alg.system(), alg.component(n, 0)) +
                  Element::generator(alg.system(), alg.component(n, 1));
    ASSERT_EQ(alg.para(n), sum) << n.label();
    ASSERT_EQ(alg.find_para(n.label()), n);
  }
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      ASSERT_EQ(commutator(alg.P(m), alg.x(n)), alg.scalar(c(delta(m, n))));
      ASSERT_TRUE(commutator(alg.P(m), alg.theta(n)).is_zero());
      ASSERT_TRUE(commutator(alg.x(m), alg.del(n)).is_zero());
    }
}

TEST(Parafermion, Examples) {
  auto alg = make(4);
  EXPECT_EQ(commutator(commutator(alg.theta(1), alg.del(2)), alg.theta(2)), alg.theta(1));
  EXPECT_EQ(sym3(alg.theta(1), alg.theta(2), alg.del(2)), c(2) * alg.theta(1));
  EXPECT_TRUE(sym3(alg.del(0), alg.del(1), alg.del(2)).is_zero());
}

// Closed forms for kappa = 1/2:
//   [[A,B],C] = 0, [[A,d_n],C] = delta_n(C) A, [[A,d_n],d_r] = -delta_r(A) d_n,
//   {A,B,d_r} = 2 delta_r(A) B + 2 delta_r(B) A, {A,d_n,d_r} = 2 delta_n(A) d_r + 2 delta_r(A) d_n,
// where delta_n(A) is 1 exactly when A = theta^n.
TEST(Parafermion, ClosedFormsOverAllTriples) {
  auto alg = make(3);
  const auto T = alg.theta_type_names();
  const int d = alg.dimension();
  auto dl = [&](int n, const ParaName& a) { return c(alg.pairing(n, a)); };
  for (const auto& A : T)
    for (const auto& B : T) {
      Element a = alg.para(A), b = alg.para(B);
      for (const auto& C : T) ASSERT_TRUE(commutator(commutator(a, b), alg.para(C)).is_zero());
      for (const auto& C : T) ASSERT_TRUE(sym3(a, b, alg.para(C)).is_zero());
      for (int r = 0; r < d; ++r)
        ASSERT_EQ(sym3(a, b, alg.del(r)), c(2) * dl(r, A) * b + c(2) * dl(r, B) * a) << A.label() << B.label();
      for (int n = 0; n < d; ++n)
        ASSERT_EQ(commutator(commutator(a, alg.del(n)), b), dl(n, B) * a) << A.label() << B.label();
    }
  for (const auto& A : T)
    for (int n = 0; n < d; ++n)
      for (int r = 0; r < d; ++r) {
        Element a = alg.para(A);
        ASSERT_EQ(commutator(commutator(a, alg.del(n)), alg.del(r)), -(dl(r, A) * alg.del(n)));
        ASSERT_EQ(sym3(a, alg.del(n), alg.del(r)), c(2) * dl(n, A) * alg.del(r) + c(2) * dl(r, A) * alg.del(n));
        for (int s = 0; s < d; ++s) {
          ASSERT_TRUE(commutator(commutator(alg.del(n), alg.del(r)), alg.del(s)).is_zero());
          ASSERT_TRUE(sym3(alg.del(n), alg.del(r), alg.del(s)).is_zero());
        }
      }
}

TEST(Parafermion, AllFamiliesPassAtDimensionFour) {
  auto alg = make(4);
  auto reports = check_parafermion_relations(alg);
  EXPECT_EQ(reports.size(), 10u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.check_id;
    EXPECT_GT(r.instances, 0u) << r.check_id;
  }
}

TEST(Parafermion, KappaOneBreaksTheMixedFamily) {
  auto alg = make(2, Rational(1));
  EXPECT_EQ(commutator(commutator(alg.theta(0), alg.del(1)), alg.theta(1)), c(2) * alg.theta(0));
  auto reports = check_parafermion_relations(alg);
  auto it = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return r.check_id == "para.dcomm.tdt"; });
  ASSERT_NE(it, reports.end());
  EXPECT_FALSE(it->passed());
  bool saw_theta = false;
  for (const auto& res : it->residuals) saw_theta |= res.element == "theta^0" || res.element == "theta^1";
  EXPECT_TRUE(saw_theta);
}

TEST(Roby, EveryMultisetVanishes) {
  auto alg = make(4);
  std::size_t n = 0;
  for_each_roby_relation(alg, [&](const RelationInstance&) { ++n; });
  EXPECT_EQ(n, 969u);  // multisets of size 3 from 17 names
  auto rep = check_roby(alg);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.instances, 969u);
}

TEST(Lorentz, SpinPartOnTheta) {
  auto alg = make(4);
  EXPECT_EQ(commutator(lorentz_J(alg, 0, 1), alg.theta_lower(1)), -alg.theta_lower(0));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r) {
        ASSERT_EQ(commutator(lorentz_J(alg, m, n), alg.theta_lower(r)),
                  vector_action(alg, m, n, r, [&](int k) { return alg.theta_lower(k); }));
        ASSERT_EQ(commutator(lorentz_J(alg, m, n), alg.del(r)),
                  vector_action(alg, m, n, r, [&](int k) { return alg.del(k); }));
      }
  EXPECT_TRUE(commutator(lorentz_J(alg, 1, 2), alg.theta_scalar()).is_zero());
}

TEST(Lorentz, PoincareBrackets) {
  auto alg = make(3);
  const int d = 3;
  EXPECT_TRUE(lorentz_generator(alg, 1, 1).is_zero());
  EXPECT_TRUE(commutator(lorentz_generator(alg, 0, 1), alg.P(2)).is_zero());
  EXPECT_TRUE((commutator(lorentz_generator(alg, 0, 1), lorentz_generator(alg, 1, 2)) + lorentz_generator(alg, 0, 2))
                  .is_zero());
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      Element L = lorentz_generator(alg, m, n);
      ASSERT_EQ(L, -lorentz_generator(alg, n, m));
      for (int r = 0; r < d; ++r) {
        ASSERT_EQ(commutator(L, alg.P(r)), vector_action(alg, m, n, r, [&](int k) { return alg.P(k); }));
        ASSERT_EQ(commutator(L, alg.x_lower(r)), vector_action(alg, m, n, r, [&](int k) { return alg.x_lower(k); }));
        ASSERT_TRUE(commutator(alg.P(m), alg.P(r)).is_zero());
        for (int s = 0; s < d; ++s)
          ASSERT_EQ(commutator(L, lorentz_generator(alg, r, s)), lorentz_bracket(alg, m, n, r, s));
      }
    }
}

TEST(Lorentz, RealisationReportsPass) {
  auto alg = make(4);
  for (const auto& r : check_poincare_realisation(alg)) EXPECT_TRUE(r.passed()) << r.check_id;
}

// Expanding {psi, psi, psi} with the closed forms above gives
// 4 s (eta_mn psi_r + eta_nr psi_m + eta_rm psi_n).
TEST(Psi, BracketSign) {
  auto alg = make(4);
  for (int s : {1, -1})
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int r = 0; r < 4; ++r) {
          Element lhs = sym3(psi(alg, s, m), psi(alg, s, n), psi(alg, s, r));
          Element rhs = c(4 * s) * (c(alg.eta(m, n)) * psi(alg, s, r) + c(alg.eta(n, r)) * psi(alg, s, m) +
                                    c(alg.eta(r, m)) * psi(alg, s, n));
          ASSERT_EQ(lhs, rhs);
        }
  EXPECT_EQ(psi(alg, 1, 2) - psi(alg, -1, 2), c(2) * alg.del(2));
  auto rep = check_psi_bracket(alg);
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.notes.empty());
}

TEST(Transformations, ActionOnCoordinates) {
  auto alg = make(4);
  for (int i = 1; i <= 3; ++i) {
    Element V = v_generator(alg, i);
    for (int a = 0; a < 4; ++a) {
      ASSERT_EQ(commutator(V, alg.theta(a)), alg.eps(i, a));
      Element dx = delta_x(alg, i, a);
      Element expected = alg.zero();
      for (int m = 0; m < 4; ++m)
        expected += commutator(alg.theta_scalar(), alg.theta(m)) * commutator(alg.eps(i, a), alg.theta_lower(m));
      ASSERT_EQ(dx, expected);
      ASSERT_EQ(commutator(V, alg.x(a)), dx);
      ASSERT_EQ(star(dx), dx);
      for (int j = 1; j <= 3; ++j) ASSERT_TRUE(commutator(V, alg.eps(j, a)).is_zero());
      for (const auto& w : alg.theta_type_names()) ASSERT_TRUE(commutator(dx, alg.para(w)).is_zero());
      for (int b = 0; b < 4; ++b) ASSERT_TRUE(commutator(dx, delta_x(alg, 3 - i % 3, b)).is_zero());
    }
  }
}

// V_i acts on theta-monomials as the derivation theta^a -> eps_i^a, so the
// triple nested action is the sum over assignments of the three families to
// the three positions.
TEST(Closure, NestedActionOnCubicMonomial) {
  auto alg = make(3);
  std::array<Element, 3> V{v_generator(alg, 1), v_generator(alg, 2), v_generator(alg, 3)};
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> idx(0, 2);
  for (int k = 0; k < 12; ++k) {
    std::array<int, 3> a{idx(rng), idx(rng), idx(rng)};
    Element target = alg.theta(a[0]) * alg.theta(a[1]) * alg.theta(a[2]);
    Element expected = alg.zero();
    std::array<int, 3> fam{1, 2, 3};
    do {
      expected += alg.eps(fam[0], a[0]) * alg.eps(fam[1], a[1]) * alg.eps(fam[2], a[2]);
    } while (std::next_permutation(fam.begin(), fam.end()));
    ASSERT_EQ(nested_action(V, target), expected);
    std::array<Element, 3> swapped{V[2], V[0], V[1]};
    ASSERT_EQ(nested_action(swapped, target), expected);
  }
}

TEST(Closure, ColourBracketAnnihilatesThetaMonomials) {
  auto alg = make(2);
  std::array<Element, 3> V{v_generator(alg, 1), v_generator(alg, 2), v_generator(alg, 3)};
  auto g = unit_grades();
  Weights6 w = colour_weights(cubic_factor(), g[0], g[1], g[2]);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> idx(0, 1);
  for (int degree = 1; degree <= 4; ++degree)
    for (int k = 0; k < 3; ++k) {
      Element target = alg.scalar(Cyclo(1));
      for (int j = 0; j < degree; ++j) target = target * alg.theta(idx(rng));
      ASSERT_TRUE(colour_action(w, V, target).is_zero()) << degree;
    }
}

// [V_i,[V_j,[V_k, x^a]]] = T(j,k,i) + T(i,k,j) with
// T(p,r,s) = sum_m [theta, eps_p^m][eps_r^a, eps_s m]; collecting the six
// orderings gives T(p,r,s) the weight w(s,p,r) + w(p,s,r).
TEST(Closure, ColourShiftOfX) {
  auto alg = make(2);
  std::array<Element, 3> V{v_generator(alg, 1), v_generator(alg, 2), v_generator(alg, 3)};
  const int a = 1;
  auto T = [&](int p, int r, int s) {
    Element sum = alg.zero();
    for (int m = 0; m < alg.dimension(); ++m)
      sum += commutator(alg.theta_scalar(), alg.eps(p, m)) * commutator(alg.eps(r, a), alg.eps_lower(s, m));
    return sum;
  };
  // Positions of orderings in Weights6: 123, 231, 312, 132, 213, 321.
  auto w = [&](int i, int j, int k) {
    const std::array<std::array<int, 3>, 6> order{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}}};
    for (std::size_t n = 0; n < 6; ++n)
      if (order[n] == std::array<int, 3>{i, j, k}) return kCol3[n];
    return Cyclo();
  };
  Element expected = alg.zero();
  std::vector<Cyclo> coeffs;
  std::array<int, 3> p{1, 2, 3};
  do {
    Cyclo coeff = w(p[2], p[0], p[1]) + w(p[0], p[2], p[1]);
    coeffs.push_back(coeff);
    expected += coeff * T(p[0], p[1], p[2]);
  } while (std::next_permutation(p.begin(), p.end()));
  Element shift = colour_action(kCol3, V, alg.x(a));
  EXPECT_EQ(shift, expected);
  std::vector<Cyclo> want{Cyclo(-1), Cyclo(-1), -Cyclo::q(), -Cyclo::q(), -Cyclo::q2(), -Cyclo::q2()};
  auto key = [](const Cyclo& z) { return z.to_string(); };
  std::sort(coeffs.begin(), coeffs.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(want.begin(), want.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  EXPECT_EQ(coeffs, want);
  EXPECT_NE(star(shift), shift);
}

TEST(Closure, ReportsPass) {
  auto alg = make(3);
  for (const auto& r : check_transformations(alg)) EXPECT_TRUE(r.passed()) << r.check_id;
  for (const auto& r : check_closure(alg)) EXPECT_TRUE(r.passed()) << r.check_id;
}

TEST(Render, CollapsedNames) {
  auto alg = make(4);
  EXPECT_EQ(render_collapsed(alg, c(2) * alg.theta(1) - alg.del(0)), "2*theta^1 - d_0");
  EXPECT_EQ(render_collapsed(alg, alg.zero()), "0");
}
