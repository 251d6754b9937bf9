#pragma once

// Abelian grading groups Z_n^k, commutation factors and the q-weighted
// ternary bracket.

#include <functional>
#include <string>
#include <vector>

#include "ternalg/exactnum.hpp"
#include "ternalg/ncalg.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

class GradeVector {
 public:
  GradeVector() = default;
  GradeVector(std::vector<int> components, int modulus);

  int modulus() const { return modulus_; }
  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<int>& components() const { return c_; }
  std::string to_string() const;  // "(1,0,0)"

  friend GradeVector operator+(const GradeVector& a, const GradeVector& b);
  friend bool operator==(const GradeVector&, const GradeVector&) = default;

 private:
  std::vector<int> c_;
  int modulus_ = 3;
};

/// The group Z_n^k, elements enumerated in lexicographic digit order.
struct GradingGroup {
  int modulus = 3;
  int rank = 3;

  GradingGroup() = default;
  GradingGroup(int n, int k);

  std::size_t order() const;
  GradeVector element(std::size_t index) const;
  std::size_t index_of(const GradeVector& g) const;
  GradeVector zero() const { return element(0); }
};

using CommutationFactor = std::function<Cyclo(const GradeVector&, const GradeVector&)>;

/// Exponent a1(b2+b3) + a2 b3 - b1(a2+a3) - b2 a3, reduced mod 3.
int cubic_factor_exponent(const GradeVector& a, const GradeVector& b);
/// N(a,b) = q^{cubic_factor_exponent(a,b)} on Z_3^3.
CommutationFactor cubic_factor();
CommutationFactor trivial_factor();

/// Exhaustive sweep of N(a,b)N(b,a) = 1, N(a,b+c) = N(a,b)N(a,c) and
/// N(a+b,c) = N(a,c)N(b,c) over the whole group.
CheckReport check_axioms(const CommutationFactor& factor, const GradingGroup& group);

/// Weights for orderings (123, 231, 312, 132, 213, 321) of the colour bracket
/// with parameter grades g1, g2, g3.
Weights6 colour_weights(const CommutationFactor& factor, const GradeVector& g1, const GradeVector& g2,
                        const GradeVector& g3);

/// The grades (1,0,0), (0,1,0), (0,0,1) of the three parameter families.
std::array<GradeVector, 3> unit_grades();

/// CSV table of N over the group, values written as exponents k of q^k.
/// Throws if some value is not a power of q.
std::string dump_factor_csv(const CommutationFactor& factor, const GradingGroup& group);

}  // namespace ternalg
