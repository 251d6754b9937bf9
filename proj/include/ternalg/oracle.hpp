#pragma once

// Explicit matrix model of small parafermionic subsystems. Every Green
// component becomes one fermionic mode; a Jordan-Wigner sign string runs over
// the modes of one Green sector (or over all modes when cross_sign = -1).
// theta-type components act as creators, d_nu as kappa * c(theta^nu) + its own
// creator, so the swap and contraction table of the subsystem holds exactly.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ternalg/exactnum.hpp"
#include "ternalg/ncalg.hpp"
#include "ternalg/paraspace.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

class SparseMatrix {
 public:
  using Entries = std::map<std::pair<std::uint32_t, std::uint32_t>, Cyclo>;  // (row, col)

  explicit SparseMatrix(std::size_t dimension = 0) : dim_(dimension) {}
  static SparseMatrix identity(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Cyclo at(std::uint32_t row, std::uint32_t col) const;
  void add(std::uint32_t row, std::uint32_t col, const Cyclo& value);

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const Cyclo& c, const SparseMatrix& m);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check_same(const SparseMatrix& o) const;

  std::size_t dim_;
  Entries entries_;
};

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MatrixRep {
  static constexpr std::size_t kMaxDimension = 4096;

  std::vector<ParaName> subset;
  SystemPtr system;
  std::size_t dimension = 1;
  std::map<GeneratorId, SparseMatrix> matrices;

  /// One fermionic operator term: coeff * (creator or annihilator of mode).
  struct ModeOp {
    bool create;
    int mode;
    Rational coeff;
  };
  std::map<GeneratorId, std::vector<ModeOp>> ops;
  std::vector<std::uint32_t> chain;  // per mode: bitmask of modes carrying its sign string
};

/// Throws OracleError when the subset would need more than 12 modes.
MatrixRep build_rep(const SuperspaceAlgebra& alg, const std::vector<ParaName>& subset);

/// Matrix of an Element, evaluated word by word exactly as written (no
/// reordering). Throws OracleError for generators outside the representation.
class MatrixEvaluator {
 public:
  explicit MatrixEvaluator(const MatrixRep& rep) : rep_(rep) {}
  SparseMatrix evaluate(const Element& e);
  const MatrixRep& rep() const { return rep_; }

 private:
  struct WordEntry {
    std::uint32_t row, col;
    Rational value;
  };
  const std::vector<WordEntry>& word(const Monomial& m);

  const MatrixRep& rep_;
  std::map<Monomial, std::vector<WordEntry>> cache_;
};

/// Pairing and cross-sector (anti)commutation of the representation matrices.
CheckReport check_rep_invariants(const MatrixRep& rep);

/// Raw word matrix equals the normal form's matrix; a symbolically zero
/// element maps to the zero matrix.
CheckReport cross_check(const Element& e, const MatrixRep& rep);

/// Random element over the Green components of rep.subset: 1..max_terms
/// words of length 0..max_degree with small Q(q) coefficients.
Element random_element(const MatrixRep& rep, std::mt19937_64& rng, int max_degree, int max_terms);

struct OracleSweepOptions {
  int max_names = 3;
  int samples = 200;
  int max_degree = 4;
  int homomorphism_pairs = 5;
  std::uint64_t seed = 1;
};

/// Runs the raw-vs-normal-form sweep on every subset of at most max_names
/// parafermion names, maps every relation instance to its subsystem and
/// requires the zero matrix, and checks the matrix product homomorphism.
std::vector<CheckReport> run_oracle_sweep(const SuperspaceAlgebra& alg, const OracleSweepOptions& options);

}  // namespace ternalg
