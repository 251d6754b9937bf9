#include "ternalg/colour.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ternalg/parallel.hpp"

namespace ternalg {

namespace {
int mod(long v, int n) { return static_cast<int>(((v % n) + n) % n); }
}  // namespace

GradeVector::GradeVector(std::vector<int> components, int modulus) : c_(std::move(components)), modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("grading modulus must be at least 2");
  for (int& x : c_) x = mod(x, modulus);
}

std::string GradeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + ")";
}

GradeVector operator+(const GradeVector& a, const GradeVector& b) {
  if (a.modulus_ != b.modulus_ || a.c_.size() != b.c_.size())
    throw std::invalid_argument("grade vectors from different groups");
  std::vector<int> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return {std::move(c), a.modulus_};
}

GradingGroup::GradingGroup(int n, int k) : modulus(n), rank(k) {
  if (n < 2 || k < 1) throw std::invalid_argument("grading group needs n >= 2 and k >= 1");
}

std::size_t GradingGroup::order() const {
  std::size_t r = 1;
  for (int i = 0; i < rank; ++i) r *= static_cast<std::size_t>(modulus);
  return r;
}

GradeVector GradingGroup::element(std::size_t index) const {
  std::vector<int> c(static_cast<std::size_t>(rank));
  for (int i = rank - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(modulus));
    index /= static_cast<std::size_t>(modulus);
  }
  return {std::move(c), modulus};
}

std::size_t GradingGroup::index_of(const GradeVector& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * static_cast<std::size_t>(modulus) + static_cast<std::size_t>(g[i]);
  return idx;
}

int cubic_factor_exponent(const GradeVector& a, const GradeVector& b) {
  if (a.rank() != 3 || b.rank() != 3) throw std::invalid_argument("the cubic factor is defined on Z_3^3");
  long e = a[0] * (b[1] + b[2]) + a[1] * b[2] - b[0] * (a[1] + a[2]) - b[1] * a[2];
  return mod(e, 3);
}

CommutationFactor cubic_factor() {
  return [](const GradeVector& a, const GradeVector& b) { return Cyclo::q_pow(cubic_factor_exponent(a, b)); };
}

CommutationFactor trivial_factor() {
  return [](const GradeVector&, const GradeVector&) { return Cyclo(1); };
}

CheckReport check_axioms(const CommutationFactor& factor, const GradingGroup& group) {
  CheckReport report("colour.axioms", "N(a,b)N(b,a)=1, N(a,b+c)=N(a,b)N(a,c), N(a+b,c)=N(a,c)N(b,c)");
  ScopedTimer timer(report);
  const std::size_t n = group.order();
  std::vector<GradeVector> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.push_back(group.element(i));
  std::vector<std::uint32_t> add(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) add[i * n + j] = static_cast<std::uint32_t>(group.index_of(elems[i] + elems[j]));

  // Intern the values of N so the triple sweeps run on small integer ids.
  std::vector<Cyclo> values;
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclo v = factor(elems[i], elems[j]);
      auto it = std::find(values.begin(), values.end(), v);
      if (it == values.end()) {
        if (values.size() >= 4096) throw std::runtime_error("commutation factor takes too many distinct values");
        values.push_back(v);
        it = values.end() - 1;
      }
      table[i * n + j] = static_cast<std::uint16_t>(it - values.begin());
    }
  const std::size_t k = values.size();
  constexpr std::int32_t kAbsent = -1;
  std::vector<std::int32_t> product(k * k, kAbsent);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      Cyclo p = values[u] * values[v];
      auto it = std::find(values.begin(), values.end(), p);
      if (it != values.end()) product[u * k + v] = static_cast<std::int32_t>(it - values.begin());
    }
  auto N = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  auto mul = [&](std::size_t u, std::size_t v) { return product[u * k + v]; };

  std::mutex mu;
  auto record = [&](const std::string& label, std::size_t a, std::size_t b, std::size_t c, bool triple) {
    std::lock_guard lock(mu);
    std::string idx = label + " a=" + elems[a].to_string() + " b=" + elems[b].to_string();
    if (triple) idx += " c=" + elems[c].to_string();
    report.add_residual(idx, "violated");
  };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::int32_t p = mul(N(a, b), N(b, a));
      if (p == kAbsent || !values[static_cast<std::size_t>(p)].is_one()) record("axiom1", a, b, 0, false);
    }

  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t nab = N(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(nab, N(a, c)) != N(a, add[b * n + c])) record("axiom2", a, b, c, true);
        if (mul(N(a, c), N(b, c)) != N(add[a * n + b], c)) record("axiom3", a, b, c, true);
      }
    }
  });
  report.instances = n * n + 2 * n * n * n;
  return report;
}

Weights6 colour_weights(const CommutationFactor& N, const GradeVector& g1, const GradeVector& g2,
                        const GradeVector& g3) {
  return {Cyclo(1),
          N(g1, g2 + g3),
          N(g1 + g2, g3),
          N(g2, g3),
          N(g1, g2),
          N(g1, g2) * N(g1, g3) * N(g2, g3)};
}

std::array<GradeVector, 3> unit_grades() {
  return {GradeVector({1, 0, 0}, 3), GradeVector({0, 1, 0}, 3), GradeVector({0, 0, 1}, 3)};
}

std::string dump_factor_csv(const CommutationFactor& factor, const GradingGroup& group) {
  const std::size_t n = group.order();
  auto label = [&](std::size_t i) {
    std::string s;
    const GradeVector g = group.element(i);
    for (int c : g.components()) s += std::to_string(c);
    return s;
  };
  auto exponent = [](const Cyclo& v) {
    for (int k = 0; k < 3; ++k)
      if (v == Cyclo::q_pow(k)) return k;
    throw std::runtime_error("factor value " + v.to_string() + " is not a power of q");
  };
  std::ostringstream os;
  os << "a\\b";
  for (std::size_t j = 0; j < n; ++j) os << ',' << label(j);
  os << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << label(i);
    GradeVector a = group.element(i);
    for (std::size_t j = 0; j < n; ++j) os << ',' << exponent(factor(a, group.element(j)));
    os << '\n';
  }
  return os.str();
}

}  // namespace ternalg
