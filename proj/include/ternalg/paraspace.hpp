#pragma once

// Ternary superspace built from order-two parafermions in the Green ansatz:
// every parafermionic symbol is the sum of two Green components, each an
// ordinary fermionic mode. Components in the same Green sector anticommute
// (theta/d pairs contract to kappa * delta), components in different sectors
// follow cross_sign. The bosonic pairs (x^mu, P_mu) satisfy [P_mu, x^nu] = delta.

#include <functional>
#include <string>
#include <vector>

#include "ternalg/colour.hpp"
#include "ternalg/exactnum.hpp"
#include "ternalg/ncalg.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

struct MetricSignature {
  int dimension = 4;
  std::vector<int> eta{1, -1, -1, -1};

  static MetricSignature minkowski(int dimension);
  /// Diagonal entry eta_{mu mu}.
  int operator()(int mu) const { return eta.at(static_cast<std::size_t>(mu)); }
  /// eta_{mu nu} for a diagonal metric.
  int operator()(int mu, int nu) const { return mu == nu ? (*this)(mu) : 0; }
  std::string to_string() const;
};

struct SuperspaceConfig {
  static constexpr int kGreenOrder = 2;

  MetricSignature metric;
  Rational pairing_kappa{1, 2};
  int cross_sign = 1;

  void validate() const;
};

enum class ParaClass { kTheta, kThetaScalar, kEps, kDel };

/// A parafermionic symbol: theta^mu, theta, eps_i^mu or d_mu.
struct ParaName {
  ParaClass cls = ParaClass::kTheta;
  int index = 0;   // spacetime index (unused for the scalar theta)
  int family = 0;  // 1..3 for eps

  std::string label() const;
  bool theta_type() const { return cls != ParaClass::kDel; }
  friend auto operator<=>(const ParaName&, const ParaName&) = default;
};

class SuperspaceAlgebra {
 public:
  static SuperspaceAlgebra build(const SuperspaceConfig& config);

  const SystemPtr& system() const { return system_; }
  const SuperspaceConfig& config() const { return config_; }
  int dimension() const { return config_.metric.dimension; }
  int eta(int mu) const { return config_.metric(mu); }
  int eta(int mu, int nu) const { return config_.metric(mu, nu); }

  /// All parafermionic names in canonical order (21 at d = 4).
  const std::vector<ParaName>& para_names() const { return names_; }
  /// theta^mu, theta and eps_i^mu (17 at d = 4).
  std::vector<ParaName> theta_type_names() const;

  /// Green component green in {0, 1}.
  GeneratorId component(const ParaName& name, int green) const;
  std::optional<ParaName> find_para(const std::string& label) const;

  /// 1 when the derivative d_nu contracts with `name`, i.e. name is theta^nu.
  int pairing(int nu, const ParaName& name) const;

  Element zero() const { return Element(system_); }
  Element scalar(const Cyclo& c) const { return Element::scalar(system_, c); }
  Element para(const ParaName& name) const;
  Element theta(int mu) const { return para({ParaClass::kTheta, mu, 0}); }
  Element theta_lower(int mu) const { return Cyclo(eta(mu)) * theta(mu); }
  Element theta_scalar() const { return para({ParaClass::kThetaScalar, 0, 0}); }
  Element del(int mu) const { return para({ParaClass::kDel, mu, 0}); }
  Element eps(int family, int mu) const { return para({ParaClass::kEps, mu, family}); }
  Element eps_lower(int family, int mu) const { return Cyclo(eta(mu)) * eps(family, mu); }
  Element x(int mu) const;
  Element x_lower(int mu) const { return Cyclo(eta(mu)) * x(mu); }
  Element P(int mu) const;

 private:
  SuperspaceConfig config_;
  SystemPtr system_;
  std::vector<ParaName> names_;
  std::vector<std::array<GeneratorId, 2>> components_;
  std::vector<GeneratorId> x_, p_;
};

/// [theta_mu, d_nu] - [theta_nu, d_mu].
Element lorentz_J(const SuperspaceAlgebra& alg, int mu, int nu);
/// x_mu P_nu - x_nu P_mu + J_{mu nu}.
Element lorentz_generator(const SuperspaceAlgebra& alg, int mu, int nu);
/// theta_mu + sign * d_mu, sign in {+1, -1}.
Element psi(const SuperspaceAlgebra& alg, int sign, int mu);
/// V_i = [eps_i^mu, d_mu] + [theta, theta^mu][eps_i^sigma, theta_mu] P_sigma.
Element v_generator(const SuperspaceAlgebra& alg, int family);
/// [theta, theta^mu][eps_i^alpha, theta_mu], the shift of x^alpha under V_i.
Element delta_x(const SuperspaceAlgebra& alg, int family, int alpha);

/// sum_k weights[k] * nested_action(ordering_k(ops), target), orderings as in colour3.
Element colour_action(const Weights6& weights, const std::array<Element, 3>& ops, const Element& target);

/// Best-effort compact rendering: linear elements whose two Green components
/// carry equal coefficients are shown by parafermion name.
std::string render_collapsed(const SuperspaceAlgebra& alg, const Element& e);

/// One instance of a relation, as unreduced (lhs - rhs).
struct RelationInstance {
  std::string family;
  std::string indices;
  std::vector<ParaName> names;
  Element residual;
};
using RelationVisitor = std::function<void(const RelationInstance&)>;

/// Double-commutator families ([[A,B],C], [[A,B],d], [[A,d],C], [[A,d],d],
/// [[d,d],C], [[d,d],d]) and symmetric families ({A,B,C}, {A,B,d}, {A,d,d},
/// {d,d,d}) for A, B, C ranging over theta-type names.
void for_each_parafermion_relation(const SuperspaceAlgebra& alg, const RelationVisitor& visit);
/// {A,B,C} = 0 for every multiset of theta-type names.
void for_each_roby_relation(const SuperspaceAlgebra& alg, const RelationVisitor& visit);

std::vector<CheckReport> check_parafermion_relations(const SuperspaceAlgebra& alg);
CheckReport check_roby(const SuperspaceAlgebra& alg);
std::vector<CheckReport> check_poincare_realisation(const SuperspaceAlgebra& alg);
CheckReport check_psi_bracket(const SuperspaceAlgebra& alg);
std::vector<CheckReport> check_transformations(const SuperspaceAlgebra& alg);
std::vector<CheckReport> check_closure(const SuperspaceAlgebra& alg);

}  // namespace ternalg
