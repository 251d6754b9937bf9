#pragma once

// Free associative algebra over a finite generator set, modulo quadratic
// swap/contraction rules, with a normal-ordering rewriter and the derived
// brackets used throughout the library.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ternalg/exactnum.hpp"

namespace ternalg {

struct GeneratorId {
  std::uint8_t index = 0;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

enum class SquareRule : std::uint8_t { kFree, kZero };

class GeneratorSystem;
using SystemPtr = std::shared_ptr<const GeneratorSystem>;

/// Thrown when two Elements from different generator registries meet.
class IncompatibleSystems : public std::invalid_argument {
 public:
  IncompatibleSystems() : std::invalid_argument("elements belong to different generator systems") {}
};

/// Thrown by GeneratorSystem::Builder::build when the rule table is not
/// locally confluent or otherwise inconsistent.
class InconsistentRules : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word in the generators. Letters are stored as raw indices; the canonical
/// order of generators is the index order.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint8_t, 14>;

  Monomial() = default;
  explicit Monomial(std::initializer_list<GeneratorId> letters);
  explicit Monomial(Storage letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  GeneratorId operator[](std::size_t i) const { return {letters_[i]}; }
  const Storage& raw() const { return letters_; }
  Storage& raw() { return letters_; }

  void push_back(GeneratorId g) { letters_.push_back(g.index); }
  Monomial reversed() const;
  Monomial concat(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.letters_ < b.letters_; }

 private:
  Storage letters_;
};

/// Registry of generators and their pairwise quadratic rules.
///
/// For u after v in canonical order the rule is
///   u v -> swap_sign(u,v) v u + contraction(u,v) 1,
/// and u u -> 0 when u has SquareRule::kZero. Only this orientation is stored.
class GeneratorSystem {
 public:
  class Builder {
   public:
    GeneratorId add(std::string name, bool fermionic, SquareRule rule);
    /// Symmetric; defaults to +1 for every pair.
    void set_swap_sign(GeneratorId u, GeneratorId v, int sign);
    /// `later` must come after `earlier` in canonical order.
    void set_contraction(GeneratorId later, GeneratorId earlier, Cyclo value);
    /// star(g) = sign * g; defaults to +1.
    void set_star_sign(GeneratorId g, int sign);
    /// Validates the table and checks local confluence on every overlap word.
    SystemPtr build() &&;

   private:
    std::vector<std::string> names_;
    std::vector<bool> fermionic_;
    std::vector<SquareRule> square_;
    std::map<std::pair<int, int>, int> signs_;
    std::map<std::pair<int, int>, Cyclo> contractions_;
    std::map<int, int> star_signs_;
  };

  std::size_t size() const { return names_.size(); }
  const std::string& name(GeneratorId g) const { return names_.at(g.index); }
  std::optional<GeneratorId> find(const std::string& name) const;
  bool is_fermionic(GeneratorId g) const { return fermionic_[g.index]; }
  SquareRule square_rule(GeneratorId g) const { return square_[g.index]; }
  int swap_sign(GeneratorId u, GeneratorId v) const { return signs_[u.index * size() + v.index]; }
  /// Contraction for the orientation u after v; zero otherwise.
  const Cyclo& contraction(GeneratorId u, GeneratorId v) const { return contractions_[u.index * size() + v.index]; }
  int star_sign(GeneratorId g) const { return star_signs_[g.index]; }

  /// True when the word is sorted with no square-rule violation.
  bool is_normal(const Monomial& m) const;

 private:
  GeneratorSystem() = default;
  void check_local_confluence() const;
  void check_star_compatible() const;

  std::vector<std::string> names_;
  std::vector<bool> fermionic_;
  std::vector<SquareRule> square_;
  std::vector<int> signs_;
  std::vector<Cyclo> contractions_;
  std::vector<int> star_signs_;
};

/// Finite linear combination of words with Q(q) coefficients. Zero
/// coefficients are never stored. Elements built by the algebra operations
/// are in normal form; raw_* operations and add_term may produce words that are
/// not yet ordered.
class Element {
 public:
  using Terms = std::map<Monomial, Cyclo>;

  explicit Element(SystemPtr system) : system_(std::move(system)) {}

  static Element scalar(SystemPtr system, const Cyclo& c);
  static Element generator(SystemPtr system, GeneratorId g);
  static Element word(SystemPtr system, Monomial m, const Cyclo& c = Cyclo(1));

  const SystemPtr& system() const { return system_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;
  std::size_t max_degree() const;

  void add_term(const Monomial& m, const Cyclo& c);
  /// Coefficient of a word (zero if absent).
  Cyclo coefficient(const Monomial& m) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Cyclo& c, const Element& e);
  /// Normal-ordered product.
  friend Element operator*(const Element& a, const Element& b);

  /// Equality of normal forms.
  friend bool operator==(const Element& a, const Element& b);

  /// Canonical text: terms in lexicographic word order, coefficients in
  /// "a+b*q" form, letters joined by '*'.
  std::string to_string() const;

 private:
  SystemPtr system_;
  Terms terms_;
};

void require_same_system(const Element& a, const Element& b);

/// Normal-ordered product a b.
Element multiply(const Element& a, const Element& b);
/// Concatenation product, no reordering.
Element raw_product(const Element& a, const Element& b);
Element normal_form(const Element& a);

enum class Strategy { kLeftmost, kRightmost, kRandom };
/// Reduces one rewrite step at a time, choosing the disordered pair by
/// `strategy`. Independent of the insertion algorithm behind normal_form.
Element reduce_with_strategy(const Element& a, Strategy strategy, std::uint64_t seed = 0);

Element commutator(const Element& a, const Element& b);
Element anticommutator(const Element& a, const Element& b);
/// Sum over the six orderings of a, b, c.
Element sym3(const Element& a, const Element& b, const Element& c);

/// Weights for the orderings (abc, bca, cab, acb, bac, cba).
using Weights6 = std::array<Cyclo, 6>;
Element colour3(const Element& a, const Element& b, const Element& c, const Weights6& weights);

/// Antilinear anti-involution: conjugates coefficients, reverses words and
/// maps each generator g to star_sign(g) * g.
Element star(const Element& a);

/// [ops[0], [ops[1], [..., [ops[n-1], target]]]].
Element nested_action(std::span<const Element> ops, const Element& target);

// Unreduced variants, used where the un-normal-formed word expansion matters.
Element raw_commutator(const Element& a, const Element& b);
Element raw_sym3(const Element& a, const Element& b, const Element& c);

}  // namespace ternalg
