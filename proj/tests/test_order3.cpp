#include <gtest/gtest.h>

#include <vector>

#include "ternalg/order3.hpp"
#include "ternalg/paraspace.hpp"

using namespace ternalg;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeros(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))); }

Matrix mul(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!a[i][k].is_zero())
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix bracket(const Matrix& a, const Matrix& b) {
  Matrix ab = mul(a, b), ba = mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

// Adjoint action of the Poincare algebra on span{x_0..x_{d-1}, 1}:
//   L_mn x_r = eta_nr x_m - eta_mr x_n,  P_m x_r = eta_mr 1.
// Column = input basis vector, row = output.
std::vector<Matrix> affine_rep(const MetricSignature& eta) {
  const int d = eta.dimension;
  std::vector<Matrix> out;
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      Matrix M = zeros(d + 1);
      for (int r = 0; r < d; ++r) {
        M[m][r] += Rational(eta(n, r));
        M[n][r] -= Rational(eta(m, r));
      }
      out.push_back(M);
    }
  for (int m = 0; m < d; ++m) {
    Matrix M = zeros(d + 1);
    for (int r = 0; r < d; ++r) M[d][r] = Rational(eta(m, r));
    out.push_back(M);
  }
  return out;
}

// Same rule on the vector representation V_r; translations act as zero.
std::vector<Matrix> vector_rep(const MetricSignature& eta) {
  const int d = eta.dimension;
  std::vector<Matrix> out;
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      Matrix M = zeros(d);
      for (int r = 0; r < d; ++r) {
        M[m][r] += Rational(eta(n, r));
        M[n][r] -= Rational(eta(m, r));
      }
      out.push_back(M);
    }
  for (int m = 0; m < d; ++m) out.push_back(zeros(d));
  return out;
}

MetricSignature euclidean(int d) {
  MetricSignature m;
  m.dimension = d;
  m.eta.assign(static_cast<std::size_t>(d), 1);
  return m;
}

const CheckReport& part(const std::vector<CheckReport>& parts, const std::string& id) {
  for (const auto& p : parts)
    if (p.check_id == id) return p;
  throw std::runtime_error("missing part " + id);
}

}  // namespace

TEST(CubicPoincare, Dimensions) {
  auto sc = cubic_poincare(MetricSignature::minkowski(4));
  EXPECT_EQ(sc.dim0(), 10);
  EXPECT_EQ(sc.dim1(), 4);
  EXPECT_EQ(sc.labels0.front(), "L_01");
  EXPECT_EQ(sc.labels0.back(), "P_3");
  EXPECT_EQ(lorentz_index(4, 2, 3), 5);
  EXPECT_THROW(lorentz_index(4, 1, 1), std::out_of_range);
}

TEST(CubicPoincare, TernaryBracketEntries) {
  auto sc = cubic_poincare(MetricSignature::minkowski(4));
  const int p0 = 6;
  EXPECT_EQ(sc.Q(0, 0, 0, p0), Rational(3));
  for (int i = 0; i < sc.dim0(); ++i) EXPECT_TRUE(sc.Q(1, 2, 3, i).is_zero());
  const MetricSignature eta = MetricSignature::minkowski(4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
          Rational want(eta(m, n) * (r == s) + eta(m, r) * (n == s) + eta(r, n) * (m == s));
          ASSERT_EQ(sc.Q(m, n, r, 6 + s), want);
        }
        for (int i = 0; i < 6; ++i) ASSERT_TRUE(sc.Q(m, n, r, i).is_zero());
      }
}

TEST(CubicPoincare, StructureConstantsMatchMatrixModel) {
  for (const auto& eta : {MetricSignature::minkowski(2), MetricSignature::minkowski(3), MetricSignature::minkowski(4),
                          MetricSignature::minkowski(5), euclidean(3)}) {
    auto sc = cubic_poincare(eta);
    auto X = affine_rep(eta);
    auto Y = vector_rep(eta);
    ASSERT_EQ(static_cast<int>(X.size()), sc.dim0());
    for (int i = 0; i < sc.dim0(); ++i)
      for (int j = 0; j < sc.dim0(); ++j) {
        Matrix want = zeros(eta.dimension + 1);
        for (int k = 0; k < sc.dim0(); ++k)
          for (int a = 0; a <= eta.dimension; ++a)
            for (int b = 0; b <= eta.dimension; ++b) want[a][b] += sc.f(i, j, k) * X[k][a][b];
        ASSERT_EQ(bracket(X[i], X[j]), want) << sc.labels0[i] << "," << sc.labels0[j];
      }
    for (int i = 0; i < sc.dim0(); ++i)
      for (int a = 0; a < sc.dim1(); ++a)
        for (int b = 0; b < sc.dim1(); ++b) ASSERT_EQ(sc.R(i, a, b), Y[i][b][a]) << sc.labels0[i];
  }
}

TEST(Axioms, PassOnCleanInstances) {
  for (int d = 2; d <= 5; ++d) {
    auto rep = check_lie_order3(cubic_poincare(MetricSignature::minkowski(d)));
    EXPECT_TRUE(rep.passed()) << d;
    EXPECT_GT(rep.instances, 0u);
  }
  EXPECT_TRUE(check_lie_order3(cubic_poincare(euclidean(4))).passed());
  EXPECT_TRUE(check_lie_order3(StructureConstants3(3, 2)).passed());
  auto parts = check_lie_order3_parts(cubic_poincare(MetricSignature::minkowski(3)));
  EXPECT_EQ(parts.size(), 5u);
}

TEST(Axioms, BrokenSymmetryOfQ) {
  auto sc = cubic_poincare(MetricSignature::minkowski(4));
  sc.Q(0, 1, 1, 9) += Rational(1);
  auto parts = check_lie_order3_parts(sc);
  const auto& storage = part(parts, "order3.storage");
  ASSERT_FALSE(storage.passed());
  EXPECT_NE(storage.residuals.front().indices.find("(0,1,1,9)"), std::string::npos);
  EXPECT_FALSE(check_lie_order3(sc).passed());
}

TEST(Axioms, BrokenJacobi) {
  auto sc = cubic_poincare(MetricSignature::minkowski(4));
  const int a = lorentz_index(4, 0, 1), b = lorentz_index(4, 0, 2), c = lorentz_index(4, 1, 2);
  sc.set_f(a, b, c, sc.f(a, b, c) + Rational(1));
  auto parts = check_lie_order3_parts(sc);
  EXPECT_TRUE(part(parts, "order3.storage").passed());
  EXPECT_FALSE(part(parts, "order3.jacobi").passed());
  EXPECT_LT(part(parts, "order3.jacobi").residual_total, part(parts, "order3.jacobi").instances);
}

TEST(Axioms, BrokenFundamentalIdentity) {
  auto sc = cubic_poincare(MetricSignature::minkowski(4));
  sc.Q(0, 0, 0, lorentz_index(4, 0, 1)) += Rational(1);
  auto parts = check_lie_order3_parts(sc);
  EXPECT_TRUE(part(parts, "order3.storage").passed());
  EXPECT_TRUE(part(parts, "order3.jacobi").passed());
  EXPECT_FALSE(part(parts, "order3.fundamental").passed());
}

TEST(Axioms, SetterKeepsInvariants) {
  StructureConstants3 sc(2, 3);
  sc.set_f(0, 1, 1, Rational(2));
  EXPECT_EQ(sc.f(1, 0, 1), Rational(-2));
  sc.set_Q(0, 1, 2, 0, Rational(1, 3));
  EXPECT_EQ(sc.Q(2, 0, 1, 0), Rational(1, 3));
  EXPECT_EQ(sc.Q(1, 2, 0, 0), Rational(1, 3));
  EXPECT_TRUE(part(check_lie_order3_parts(sc), "order3.storage").passed());
}

TEST(Json, RoundTripAndRejection) {
  for (int d = 2; d <= 5; ++d) {
    auto sc = cubic_poincare(MetricSignature::minkowski(d));
    EXPECT_EQ(StructureConstants3::from_json(sc.to_json()), sc);
  }
  EXPECT_THROW(StructureConstants3::from_json("not json"), std::invalid_argument);
  EXPECT_THROW(StructureConstants3::from_json(R"({"dim0":2,"dim1":1,"f":[[0,1,5,"1"]],"R":[],"Q":[]})"),
               std::invalid_argument);
  EXPECT_THROW(StructureConstants3::from_json(R"({"dim0":2,"dim1":1,"f":[[0,1,1,"1"]],"R":[],"Q":[]})"),
               std::invalid_argument);
  EXPECT_THROW(StructureConstants3::from_json(R"({"dim0":1,"dim1":2,"f":[],"R":[],"Q":[[0,0,1,0,"1"]]})"),
               std::invalid_argument);
  EXPECT_THROW(StructureConstants3::from_json(R"({"dim0":1,"dim1":1,"f":[],"R":[[0,0,0,"1/0"]],"Q":[]})"),
               std::invalid_argument);
  auto ok = StructureConstants3::from_json(R"({"dim0":2,"dim1":1,"f":[[0,1,1,"1/2"],[1,0,1,"-1/2"]],"R":[],"Q":[]})");
  EXPECT_EQ(ok.f(0, 1, 1), Rational(1, 2));
}

TEST(AgainstSuperspace, MatchesAndDetectsMetricFlip) {
  for (int d : {2, 4}) {
    SuperspaceConfig cfg;
    cfg.metric = MetricSignature::minkowski(d);
    auto alg = SuperspaceAlgebra::build(cfg);
    EXPECT_TRUE(check_against_superspace(cubic_poincare(cfg.metric), alg).passed()) << d;
    MetricSignature flipped = cfg.metric;
    for (auto& e : flipped.eta) e = -e;
    EXPECT_FALSE(check_against_superspace(cubic_poincare(flipped), alg).passed()) << d;
  }
  SuperspaceConfig cfg;
  cfg.metric = MetricSignature::minkowski(3);
  EXPECT_FALSE(check_against_superspace(cubic_poincare(MetricSignature::minkowski(4)), SuperspaceAlgebra::build(cfg))
                   .passed());
}
