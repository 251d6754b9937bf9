#include "ternalg/exactnum.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace ternalg {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v > std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFull));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_i64(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(std::numeric_limits<long>::min());
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 1 && fits(n)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    return r;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.promote_from(mpq_class(to_mpz(n), to_mpz(d)));
  }
  return r;
}

void Rational::assign(const mpq_class& v) {
  mpq_class c(v);
  c.canonicalize();
  if (mpz_fits_i64(c.get_num()) && mpz_fits_i64(c.get_den())) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    promote_from(c);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) throw ParseError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(mpq_class(mpz_class(num), d));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return to_mpq().get_num(); }
mpz_class Rational::denominator() const { return to_mpq().get_den(); }

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, 1);
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_)
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  return Rational(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value that fits is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// (a + b q)(c + d q) = ac + (ad + bc) q + bd q^2, with q^2 = -1 - q.
Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return Cyclo(a.re_ * b.re_);
  Rational bd = a.im_ * b.im_;
  return {a.re_ * b.re_ - bd, a.re_ * b.im_ + a.im_ * b.re_ - bd};
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

// |a + b q|^2 = a^2 - ab + b^2.
Rational Cyclo::norm() const { return re_ * re_ - re_ * im_ + im_ * im_; }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  Rational inv = Rational(1) / norm();
  return conj() * inv;
}

Cyclo Cyclo::q_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return Cyclo(1);
    case 1:
      return q();
    default:
      return q2();
  }
}

std::string Cyclo::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string s = re_.is_zero() ? "" : re_.to_string();
  const Rational mag = im_.sign() < 0 ? -im_ : im_;
  if (im_.sign() < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  return s + (mag.is_one() ? "q" : mag.to_string() + "*q");
}

Cyclo Cyclo::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty cyclotomic literal");
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

  auto parse_q_part = [&](std::string part) -> Rational {
    // part is "[sign]...q" with optional "r*" prefix
    bool neg = false;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
      neg = part[0] == '-';
      part.erase(0, 1);
    }
    if (part == "q") return neg ? Rational(-1) : Rational(1);
    if (part.size() < 3 || part.substr(part.size() - 2) != "*q")
      throw ParseError("malformed q coefficient in '" + s + "'");
    Rational r = Rational::parse(part.substr(0, part.size() - 2));
    return neg ? -r : r;
  };

  if (s.back() != 'q') return Cyclo(Rational::parse(s));
  // split at the last top-level sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(), parse_q_part(s)};
  return {Rational::parse(s.substr(0, split)), parse_q_part(s.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z) { return os << z.to_string(); }

}  // namespace ternalg
