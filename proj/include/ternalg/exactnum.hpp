#pragma once

// Exact arithmetic over Q and over the cyclotomic field Q(q), q^2 + q + 1 = 0.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternalg {

/// Reduced fraction with positive denominator.
///
/// Values whose numerator and denominator fit in int64 live inline; anything
/// larger is promoted to a shared, immutable GMP rational. Results are demoted
/// back whenever they fit, so the representation of a value is unique and
/// equality can compare fields directly.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == kMin) {
      num_ = 0;
      promote_from(mpq_class(mpz_class(static_cast<long>(n))));
    }
  }
  Rational(int n) : Rational(static_cast<std::int64_t>(n)) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& v) { assign(v); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr std::int64_t kMin = INT64_MIN;

  void assign(const mpq_class& v);
  void promote_from(const mpq_class& v) { big_ = std::make_shared<const mpq_class>(v); }
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element re + im*q of Q(q) with q = exp(2 pi i / 3).
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  Cyclo(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Cyclo q() { return {0, 1}; }
  static Cyclo q2() { return {-1, -1}; }

  /// Parses the canonical rendering: "a", "a+b*q", "a-b*q", "b*q", "q", "-q".
  static Cyclo parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  /// Complex conjugation, q -> q^2 = -1 - q.
  Cyclo conj() const { return {re_ - im_, -im_}; }
  /// z * conj(z), always real and nonnegative.
  Rational norm() const;
  Cyclo inverse() const;

  /// "a" when real, otherwise "a+b*q" / "a-b*q".
  std::string to_string() const;

  Cyclo operator-() const { return {-re_, -im_}; }
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Rational& b) { return {a.re_ * b, a.im_ * b}; }
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  /// q^k for any integer k.
  static Cyclo q_pow(long k);

  friend bool operator==(const Cyclo& a, const Cyclo& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& z);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ternalg
