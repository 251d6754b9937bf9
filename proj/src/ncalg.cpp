#include "ternalg/ncalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace ternalg {

Monomial::Monomial(std::initializer_list<GeneratorId> letters) {
  for (auto g : letters) letters_.push_back(g.index);
}

Monomial Monomial::reversed() const {
  Storage r(letters_.rbegin(), letters_.rend());
  return Monomial(std::move(r));
}

Monomial Monomial::concat(const Monomial& other) const {
  Storage r = letters_;
  r.insert(r.end(), other.letters_.begin(), other.letters_.end());
  return Monomial(std::move(r));
}

// ---------------------------------------------------------------------------
// GeneratorSystem

GeneratorId GeneratorSystem::Builder::add(std::string name, bool fermionic, SquareRule rule) {
  if (names_.size() >= 255) throw InconsistentRules("too many generators (max 255)");
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw InconsistentRules("duplicate generator name '" + name + "'");
  names_.push_back(std::move(name));
  fermionic_.push_back(fermionic);
  square_.push_back(rule);
  return {static_cast<std::uint8_t>(names_.size() - 1)};
}

void GeneratorSystem::Builder::set_swap_sign(GeneratorId u, GeneratorId v, int sign) {
  if (sign != 1 && sign != -1) throw InconsistentRules("swap sign must be +1 or -1");
  if (u == v) throw InconsistentRules("swap sign is defined for distinct generators only");
  signs_[{u.index, v.index}] = sign;
  signs_[{v.index, u.index}] = sign;
}

void GeneratorSystem::Builder::set_contraction(GeneratorId later, GeneratorId earlier, Cyclo value) {
  if (!(earlier < later))
    throw InconsistentRules("contraction is stored for the orientation later-after-earlier only");
  contractions_[{later.index, earlier.index}] = std::move(value);
}

void GeneratorSystem::Builder::set_star_sign(GeneratorId g, int sign) {
  if (g.index >= names_.size()) throw std::out_of_range("unknown generator");
  if (sign != 1 && sign != -1) throw std::invalid_argument("star sign must be +1 or -1");
  star_signs_[g.index] = sign;
}

SystemPtr GeneratorSystem::Builder::build() && {
  std::shared_ptr<GeneratorSystem> sys(new GeneratorSystem());
  const std::size_t n = names_.size();
  sys->names_ = std::move(names_);
  sys->fermionic_ = std::move(fermionic_);
  sys->square_ = std::move(square_);
  sys->signs_.assign(n * n, 1);
  sys->contractions_.assign(n * n, Cyclo());
  for (const auto& [key, s] : signs_) sys->signs_[key.first * n + key.second] = s;
  for (const auto& [key, c] : contractions_) sys->contractions_[key.first * n + key.second] = c;
  sys->star_signs_.assign(n, 1);
  for (const auto& [g, s] : star_signs_) sys->star_signs_[static_cast<std::size_t>(g)] = s;
  sys->check_local_confluence();
  sys->check_star_compatible();
  return sys;
}

std::optional<GeneratorId> GeneratorSystem::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return GeneratorId{static_cast<std::uint8_t>(it - names_.begin())};
}

bool GeneratorSystem::is_normal(const Monomial& m) const {
  const auto& w = m.raw();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return false;
    if (w[i] == w[i + 1] && square_[w[i]] == SquareRule::kZero) return false;
  }
  return true;
}

namespace {

using Storage = Monomial::Storage;

void accumulate(Element::Terms& terms, const Monomial& m, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

struct Pending {
  Storage word;
  Cyclo coeff;
};

// Appends coeff * NF(prefix[0..len) g tail) to out, where prefix is normal and
// tail is a normal run of letters strictly after g.
void place_letter(const GeneratorSystem& sys, const Storage& prefix, std::size_t len, std::uint8_t g,
                  const Cyclo& coeff, Storage& tail, std::vector<Pending>& out) {
  if (len == 0 || prefix[len - 1] < g ||
      (prefix[len - 1] == g && sys.square_rule({g}) == SquareRule::kFree)) {
    Storage w(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len));
    w.push_back(g);
    w.insert(w.end(), tail.rbegin(), tail.rend());
    out.push_back({std::move(w), coeff});
    return;
  }
  std::uint8_t u = prefix[len - 1];
  if (u == g) return;  // square rule zero
  const Cyclo& contr = sys.contraction({u}, {g});
  if (!contr.is_zero()) {
    Storage w(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len - 1));
    w.insert(w.end(), tail.rbegin(), tail.rend());
    out.push_back({std::move(w), coeff * contr});
  }
  int s = sys.swap_sign({u}, {g});
  tail.push_back(u);
  place_letter(sys, prefix, len - 1, g, s > 0 ? coeff : -coeff, tail, out);
  tail.pop_back();
}

// Adds coeff * NF(left right) to terms; left must be normal.
void multiply_words_into(const GeneratorSystem& sys, Element::Terms& terms, const Storage& left, const Cyclo& coeff,
                         const Storage& right) {
  std::vector<Pending> cur{{left, coeff}};
  std::vector<Pending> next;
  Storage tail;
  for (std::uint8_t g : right) {
    next.clear();
    for (const auto& p : cur) place_letter(sys, p.word, p.word.size(), g, p.coeff, tail, next);
    std::swap(cur, next);
    if (cur.size() > 16) {
      // merge duplicates to keep the frontier small
      Element::Terms merged;
      for (auto& p : cur) accumulate(merged, Monomial(std::move(p.word)), p.coeff);
      cur.clear();
      for (auto& [m, c] : merged) cur.push_back({m.raw(), c});
    }
  }
  for (auto& p : cur) accumulate(terms, Monomial(std::move(p.word)), p.coeff);
}

}  // namespace

void GeneratorSystem::check_local_confluence() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (signs_[i * n + j] != signs_[j * n + i])
        throw InconsistentRules("swap sign not symmetric for " + names_[i] + ", " + names_[j]);
      if (i < j && !contractions_[i * n + j].is_zero())
        throw InconsistentRules("contraction stored in the wrong orientation for " + names_[i] + ", " + names_[j]);
    }
    if (!contractions_[i * n + i].is_zero()) throw InconsistentRules("self-contraction on " + names_[i]);
  }

  auto reducible = [&](std::uint8_t a, std::uint8_t b) {
    return a > b || (a == b && square_[a] == SquareRule::kZero);
  };
  // Rewrite the pair at `pos` once, then normalise everything else.
  auto one_step_then_normalise = [&](const Storage& w, std::size_t pos) {
    Element::Terms out;
    std::uint8_t u = w[pos], v = w[pos + 1];
    if (u == v) return out;
    Storage swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    Element::Terms step;
    accumulate(step, Monomial(swapped), Cyclo(signs_[u * n + v]));
    const Cyclo& c = contractions_[u * n + v];
    if (!c.is_zero()) {
      Storage shorter = w;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos),
                    shorter.begin() + static_cast<std::ptrdiff_t>(pos + 2));
      accumulate(step, Monomial(shorter), c);
    }
    for (const auto& [m, coeff] : step) multiply_words_into(*this, out, {}, coeff, m.raw());
    return out;
  };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t c = 0; c <= b; ++c) {
        auto ua = static_cast<std::uint8_t>(a), ub = static_cast<std::uint8_t>(b), uc = static_cast<std::uint8_t>(c);
        if (!reducible(ua, ub) || !reducible(ub, uc)) continue;
        Storage w{ua, ub, uc};
        auto left = one_step_then_normalise(w, 0);
        auto right = one_step_then_normalise(w, 1);
        if (left != right)
          throw InconsistentRules("rules are not locally confluent on the overlap " + names_[a] + "*" + names_[b] +
                                  "*" + names_[c]);
      }
}

// ---------------------------------------------------------------------------
// Element

Element Element::scalar(SystemPtr system, const Cyclo& c) {
  Element e(std::move(system));
  e.add_term(Monomial(), c);
  return e;
}

Element Element::generator(SystemPtr system, GeneratorId g) {
  if (g.index >= system->size()) throw std::out_of_range("generator id out of range");
  Element e(std::move(system));
  e.add_term(Monomial{g}, Cyclo(1));
  return e;
}

Element Element::word(SystemPtr system, Monomial m, const Cyclo& c) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].index >= system->size()) throw std::out_of_range("generator id out of range");
  Element e(std::move(system));
  e.add_term(m, c);
  return e;
}

bool Element::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return system_->is_normal(t.first); });
}

std::size_t Element::max_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

void Element::add_term(const Monomial& m, const Cyclo& c) { accumulate(terms_, m, c); }

Cyclo Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclo() : it->second;
}

Element Element::operator-() const {
  Element r(system_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  require_same_system(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_system(*this, o);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

Element operator*(const Cyclo& c, const Element& e) {
  Element r(e.system_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : e.terms_) r.terms_.emplace(m, c * v);
  return r;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  require_same_system(a, b);
  if (a.is_normal() && b.is_normal()) return a.terms_ == b.terms_;
  return normal_form(a).terms_ == normal_form(b).terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      Rational mag = negative ? -c.re() : c.re();
      if (!mag.is_one() || m.empty()) coeff = mag.to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << coeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 || !coeff.empty()) os << '*';
      os << system_->name(m[i]);
    }
  }
  return os.str();
}

void require_same_system(const Element& a, const Element& b) {
  if (a.system() != b.system()) throw IncompatibleSystems();
}

// ---------------------------------------------------------------------------
// Products and brackets

Element multiply(const Element& a, const Element& b) {
  require_same_system(a, b);
  const Element na = a.is_normal() ? a : normal_form(a);
  Element::Terms out;
  const auto& sys = *a.system();
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : na.terms()) multiply_words_into(sys, out, ma.raw(), ca * cb, mb.raw());
  Element r(a.system());
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

Element raw_product(const Element& a, const Element& b) {
  require_same_system(a, b);
  Element r(a.system());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma.concat(mb), ca * cb);
  return r;
}

Element normal_form(const Element& a) {
  Element::Terms out;
  const auto& sys = *a.system();
  for (const auto& [m, c] : a.terms()) {
    if (sys.is_normal(m))
      accumulate(out, m, c);
    else
      multiply_words_into(sys, out, {}, c, m.raw());
  }
  Element r(a.system());
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

Element reduce_with_strategy(const Element& a, Strategy strategy, std::uint64_t seed) {
  const auto& sys = *a.system();
  std::mt19937_64 rng(seed);
  Element::Terms pending = a.terms();
  Element::Terms done;
  std::vector<std::size_t> descents;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Storage& w = node.key().raw();
    const Cyclo& c = node.mapped();
    descents.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1] || (w[i] == w[i + 1] && sys.square_rule({w[i]}) == SquareRule::kZero))
        descents.push_back(i);
    if (descents.empty()) {
      accumulate(done, node.key(), c);
      continue;
    }
    std::size_t pos = 0;
    switch (strategy) {
      case Strategy::kLeftmost:
        pos = descents.front();
        break;
      case Strategy::kRightmost:
        pos = descents.back();
        break;
      case Strategy::kRandom:
        pos = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
        break;
    }
    std::uint8_t u = w[pos], v = w[pos + 1];
    if (u == v) continue;  // u u -> 0
    Storage swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    int s = sys.swap_sign({u}, {v});
    accumulate(pending, Monomial(swapped), s > 0 ? c : -c);
    const Cyclo& contr = sys.contraction({u}, {v});
    if (!contr.is_zero()) {
      Storage shorter = w;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(pos),
                    shorter.begin() + static_cast<std::ptrdiff_t>(pos + 2));
      accumulate(pending, Monomial(shorter), c * contr);
    }
  }
  Element r(a.system());
  for (const auto& [m, coeff] : done) r.add_term(m, coeff);
  return r;
}

namespace {

// When no letter of m1 contracts with a letter of m2, m2 m1 = s m1 m2 in the
// algebra, with s the product of the pairwise swap signs. Returns false when
// some cross pair contracts; sets s = 0 when both products vanish.
bool cross_swap_sign(const GeneratorSystem& sys, const Monomial& m1, const Monomial& m2, int& s) {
  for (auto u : m1.raw())
    for (auto v : m2.raw()) {
      if (u == v) continue;
      auto hi = std::max(u, v), lo = std::min(u, v);
      if (!sys.contraction({hi}, {lo}).is_zero()) return false;
    }
  s = 1;
  for (auto u : m1.raw())
    for (auto v : m2.raw()) {
      if (u == v) {
        if (sys.square_rule({u}) == SquareRule::kZero) {
          s = 0;
          return true;
        }
        continue;
      }
      s *= sys.swap_sign({u}, {v});
    }
  return true;
}

}  // namespace

Element commutator(const Element& a, const Element& b) {
  require_same_system(a, b);
  const Element na = a.is_normal() ? a : normal_form(a);
  const Element nb = b.is_normal() ? b : normal_form(b);
  const auto& sys = *a.system();
  Element::Terms out;
  for (const auto& [ma, ca] : na.terms())
    for (const auto& [mb, cb] : nb.terms()) {
      int s = 0;
      if (cross_swap_sign(sys, ma, mb, s)) {
        if (s == -1) multiply_words_into(sys, out, ma.raw(), Cyclo(2) * ca * cb, mb.raw());
        continue;
      }
      Cyclo c = ca * cb;
      multiply_words_into(sys, out, ma.raw(), c, mb.raw());
      multiply_words_into(sys, out, mb.raw(), -c, ma.raw());
    }
  Element r(a.system());
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

Element anticommutator(const Element& a, const Element& b) { return multiply(a, b) + multiply(b, a); }

Element sym3(const Element& a, const Element& b, const Element& c) {
  Weights6 ones{Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1)};
  return colour3(a, b, c, ones);
}

Element colour3(const Element& a, const Element& b, const Element& c, const Weights6& w) {
  require_same_system(a, b);
  require_same_system(a, c);
  const std::array<std::array<const Element*, 3>, 6> orders{{
      {&a, &b, &c},
      {&b, &c, &a},
      {&c, &a, &b},
      {&a, &c, &b},
      {&b, &a, &c},
      {&c, &b, &a},
  }};
  Element r(a.system());
  for (std::size_t k = 0; k < 6; ++k) {
    if (w[k].is_zero()) continue;
    r += w[k] * multiply(multiply(*orders[k][0], *orders[k][1]), *orders[k][2]);
  }
  return r;
}

// star maps the rule u v = s v u + c to v u = s u v + conj(c) sign(u) sign(v),
// which must agree with v u = s u v - s c.
void GeneratorSystem::check_star_compatible() const {
  const std::size_t n = size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < u; ++v) {
      const Cyclo& c = contractions_[u * n + v];
      if (c.is_zero()) continue;
      Cyclo lhs = c.conj() * Cyclo(star_signs_[u] * star_signs_[v]);
      Cyclo rhs = Cyclo(-signs_[u * n + v]) * c;
      if (lhs != rhs)
        throw InconsistentRules("star is not compatible with the rule for " + names_[u] + " " + names_[v]);
    }
}

Element star(const Element& a) {
  const auto& sys = *a.system();
  Element r(a.system());
  for (const auto& [m, c] : a.terms()) {
    int sign = 1;
    for (auto g : m.raw()) sign *= sys.star_sign({g});
    r.add_term(m.reversed(), sign > 0 ? c.conj() : Cyclo(-1) * c.conj());
  }
  return normal_form(r);
}

Element nested_action(std::span<const Element> ops, const Element& target) {
  Element r = target;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = commutator(*it, r);
  return r;
}

Element raw_commutator(const Element& a, const Element& b) { return raw_product(a, b) - raw_product(b, a); }

Element raw_sym3(const Element& a, const Element& b, const Element& c) {
  return raw_product(raw_product(a, b), c) + raw_product(raw_product(b, c), a) +
         raw_product(raw_product(c, a), b) + raw_product(raw_product(a, c), b) +
         raw_product(raw_product(b, a), c) + raw_product(raw_product(c, b), a);
}

}  // namespace ternalg
