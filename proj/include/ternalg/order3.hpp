#pragma once

// Elementary Lie algebras of order three, g = g0 + g1, given by structure
// constants:
//   [X_i, X_j] = f_ij^k X_k,  [X_i, Y_a] = R_ia^b Y_b,  {Y_a, Y_b, Y_c} = Q_abc^i X_i.

#include <string>
#include <string_view>
#include <vector>

#include "ternalg/exactnum.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

class SuperspaceAlgebra;
struct MetricSignature;

class StructureConstants3 {
 public:
  StructureConstants3(int dim0, int dim1);

  int dim0() const { return dim0_; }
  int dim1() const { return dim1_; }

  Rational& f(int i, int j, int k) { return f_[idx3(i, j, k, dim0_, dim0_)]; }
  const Rational& f(int i, int j, int k) const { return f_[idx3(i, j, k, dim0_, dim0_)]; }
  Rational& R(int i, int a, int b) { return r_[idx3(i, a, b, dim1_, dim1_)]; }
  const Rational& R(int i, int a, int b) const { return r_[idx3(i, a, b, dim1_, dim1_)]; }
  Rational& Q(int a, int b, int c, int i) { return q_[idx4(a, b, c, i)]; }
  const Rational& Q(int a, int b, int c, int i) const { return q_[idx4(a, b, c, i)]; }

  /// Sets f_ij^k = v and f_ji^k = -v.
  void set_f(int i, int j, int k, const Rational& v);
  /// Sets Q on every permutation of (a, b, c).
  void set_Q(int a, int b, int c, int i, const Rational& v);

  std::vector<std::string> labels0;
  std::vector<std::string> labels1;

  /// {dim0, dim1, f: [[i,j,k,"p/q"]...], R: [...], Q: [[a,b,c,i,"p/q"]...]},
  /// nonzero entries only; optional labels0/labels1.
  std::string to_json() const;
  /// Throws std::invalid_argument on malformed input, out-of-range indices,
  /// or when f is not antisymmetric or Q not symmetric.
  static StructureConstants3 from_json(std::string_view text);

  friend bool operator==(const StructureConstants3&, const StructureConstants3&) = default;

 private:
  std::size_t idx3(int i, int j, int k, int nj, int nk) const;
  std::size_t idx4(int a, int b, int c, int i) const;

  int dim0_;
  int dim1_;
  std::vector<Rational> f_;
  std::vector<Rational> r_;
  std::vector<Rational> q_;
};

/// Separate reports for storage invariants, Jacobi, representation property,
/// equivariance of Q and the fundamental identity.
std::vector<CheckReport> check_lie_order3_parts(const StructureConstants3& sc);
/// All parts merged into one report "order3.axioms"; residual indices carry the part name.
CheckReport check_lie_order3(const StructureConstants3& sc);

/// g0 = Lorentz L_{mu nu} (mu < nu) then translations P_mu; g1 = V_mu.
StructureConstants3 cubic_poincare(const MetricSignature& metric);
/// Position of L_{mu nu} (mu < nu) in the g0 basis of cubic_poincare.
int lorentz_index(int dimension, int mu, int nu);

/// Compares [L,L], [L,P], [P,P] and [L, theta_r] computed in the superspace
/// with the f and R contractions of sc (V_r realised by theta_r).
CheckReport check_against_superspace(const StructureConstants3& sc, const SuperspaceAlgebra& alg);

}  // namespace ternalg
