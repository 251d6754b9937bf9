#include "ternalg/order3.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "ternalg/parallel.hpp"
#include "ternalg/paraspace.hpp"

namespace ternalg {

using nlohmann::json;

StructureConstants3::StructureConstants3(int dim0, int dim1) : dim0_(dim0), dim1_(dim1) {
  if (dim0 < 0 || dim1 < 0) throw std::invalid_argument("structure constant dimensions must be nonnegative");
  auto n0 = static_cast<std::size_t>(dim0), n1 = static_cast<std::size_t>(dim1);
  f_.resize(n0 * n0 * n0);
  r_.resize(n0 * n1 * n1);
  q_.resize(n1 * n1 * n1 * n0);
  for (int i = 0; i < dim0; ++i) labels0.push_back("X" + std::to_string(i));
  for (int a = 0; a < dim1; ++a) labels1.push_back("Y" + std::to_string(a));
}

std::size_t StructureConstants3::idx3(int i, int j, int k, int nj, int nk) const {
  return (static_cast<std::size_t>(i) * static_cast<std::size_t>(nj) + static_cast<std::size_t>(j)) *
             static_cast<std::size_t>(nk) +
         static_cast<std::size_t>(k);
}

std::size_t StructureConstants3::idx4(int a, int b, int c, int i) const {
  auto n1 = static_cast<std::size_t>(dim1_);
  return ((static_cast<std::size_t>(a) * n1 + static_cast<std::size_t>(b)) * n1 + static_cast<std::size_t>(c)) *
             static_cast<std::size_t>(dim0_) +
         static_cast<std::size_t>(i);
}

void StructureConstants3::set_f(int i, int j, int k, const Rational& v) {
  f(i, j, k) = v;
  f(j, i, k) = -v;
}

void StructureConstants3::set_Q(int a, int b, int c, int i, const Rational& v) {
  std::array<int, 3> p{a, b, c};
  std::sort(p.begin(), p.end());
  do {
    Q(p[0], p[1], p[2], i) = v;
  } while (std::next_permutation(p.begin(), p.end()));
}

std::string StructureConstants3::to_json() const {
  json doc;
  doc["dim0"] = dim0_;
  doc["dim1"] = dim1_;
  doc["labels0"] = labels0;
  doc["labels1"] = labels1;
  json f = json::array(), r = json::array(), q = json::array();
  for (int i = 0; i < dim0_; ++i)
    for (int j = 0; j < dim0_; ++j)
      for (int k = 0; k < dim0_; ++k)
        if (!this->f(i, j, k).is_zero()) f.push_back({i, j, k, this->f(i, j, k).to_string()});
  for (int i = 0; i < dim0_; ++i)
    for (int a = 0; a < dim1_; ++a)
      for (int b = 0; b < dim1_; ++b)
        if (!R(i, a, b).is_zero()) r.push_back({i, a, b, R(i, a, b).to_string()});
  for (int a = 0; a < dim1_; ++a)
    for (int b = 0; b < dim1_; ++b)
      for (int c = 0; c < dim1_; ++c)
        for (int i = 0; i < dim0_; ++i)
          if (!Q(a, b, c, i).is_zero()) q.push_back({a, b, c, i, Q(a, b, c, i).to_string()});
  doc["f"] = std::move(f);
  doc["R"] = std::move(r);
  doc["Q"] = std::move(q);
  return doc.dump(1);
}

StructureConstants3 StructureConstants3::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("structure constants: ") + e.what());
  }
  try {
    const int dim0 = doc.at("dim0").get<int>();
    const int dim1 = doc.at("dim1").get<int>();
    StructureConstants3 sc(dim0, dim1);
    if (doc.contains("labels0")) sc.labels0 = doc["labels0"].get<std::vector<std::string>>();
    if (doc.contains("labels1")) sc.labels1 = doc["labels1"].get<std::vector<std::string>>();
    if (sc.labels0.size() != static_cast<std::size_t>(dim0) || sc.labels1.size() != static_cast<std::size_t>(dim1))
      throw std::invalid_argument("structure constants: label count does not match dimension");
    auto read = [&](const char* key, std::initializer_list<int> bounds, auto store) {
      for (const auto& entry : doc.at(key)) {
        if (!entry.is_array() || entry.size() != bounds.size() + 1)
          throw std::invalid_argument(std::string("structure constants: malformed entry in ") + key);
        std::vector<int> idx;
        std::size_t pos = 0;
        for (int bound : bounds) {
          int v = entry[pos++].get<int>();
          if (v < 0 || v >= bound) throw std::invalid_argument(std::string("structure constants: index out of range in ") + key);
          idx.push_back(v);
        }
        store(idx, Rational::parse(entry[pos].get<std::string>()));
      }
    };
    read("f", {dim0, dim0, dim0}, [&](const std::vector<int>& i, const Rational& v) { sc.f(i[0], i[1], i[2]) = v; });
    read("R", {dim0, dim1, dim1}, [&](const std::vector<int>& i, const Rational& v) { sc.R(i[0], i[1], i[2]) = v; });
    read("Q", {dim1, dim1, dim1, dim0},
         [&](const std::vector<int>& i, const Rational& v) { sc.Q(i[0], i[1], i[2], i[3]) = v; });
    for (const auto& rep : check_lie_order3_parts(sc))
      if (rep.check_id == "order3.storage" && !rep.passed())
        throw std::invalid_argument("structure constants: " + rep.residuals.front().indices + " " +
                                    rep.residuals.front().element);
    return sc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("structure constants: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("structure constants: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string tuple(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

class Recorder {
 public:
  explicit Recorder(CheckReport& rep) : rep_(rep) {}
  void operator()(std::string indices, const Rational& value) {
    std::lock_guard lock(mu_);
    rep_.add_residual(std::move(indices), value.to_string());
  }

 private:
  CheckReport& rep_;
  std::mutex mu_;
};

}  // namespace

std::vector<CheckReport> check_lie_order3_parts(const StructureConstants3& sc) {
  const int n0 = sc.dim0(), n1 = sc.dim1();
  std::vector<CheckReport> out;

  {
    CheckReport rep("order3.storage", "f_ij^k = -f_ji^k; Q_abc^i symmetric in a,b,c");
    ScopedTimer timer(rep);
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n0; ++j)
        for (int k = 0; k < n0; ++k) {
          ++rep.instances;
          Rational v = sc.f(i, j, k) + sc.f(j, i, k);
          if (!v.is_zero()) rep.add_residual("f" + tuple({i, j, k}), v.to_string());
        }
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n1; ++b)
        for (int c = 0; c < n1; ++c)
          for (int i = 0; i < n0; ++i) {
            ++rep.instances;
            const Rational& v = sc.Q(a, b, c, i);
            std::array<std::array<int, 3>, 2> others{{{b, a, c}, {a, c, b}}};
            for (const auto& o : others) {
              Rational d = v - sc.Q(o[0], o[1], o[2], i);
              if (!d.is_zero()) {
                rep.add_residual("Q" + tuple({a, b, c, i}) + " vs Q" + tuple({o[0], o[1], o[2], i}), d.to_string());
                break;
              }
            }
          }
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.jacobi", "f_ij^m f_mk^l + f_jk^m f_mi^l + f_ki^m f_mj^l = 0");
    ScopedTimer timer(rep);
    Recorder record(rep);
    parallel_for(static_cast<std::size_t>(n0), [&](std::size_t iu) {
      const int i = static_cast<int>(iu);
      for (int j = 0; j < n0; ++j)
        for (int k = 0; k < n0; ++k)
          for (int l = 0; l < n0; ++l) {
            Rational s;
            for (int m = 0; m < n0; ++m)
              s += sc.f(i, j, m) * sc.f(m, k, l) + sc.f(j, k, m) * sc.f(m, i, l) + sc.f(k, i, m) * sc.f(m, j, l);
            if (!s.is_zero()) record(tuple({i, j, k, l}), s);
          }
    });
    rep.instances = static_cast<std::size_t>(n0) * n0 * n0 * n0;
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.representation", "R_ja^b R_ib^c - R_ia^b R_jb^c = f_ij^k R_ka^c");
    ScopedTimer timer(rep);
    Recorder record(rep);
    parallel_for(static_cast<std::size_t>(n0), [&](std::size_t iu) {
      const int i = static_cast<int>(iu);
      for (int j = 0; j < n0; ++j)
        for (int a = 0; a < n1; ++a)
          for (int c = 0; c < n1; ++c) {
            Rational s;
            for (int b = 0; b < n1; ++b) s += sc.R(j, a, b) * sc.R(i, b, c) - sc.R(i, a, b) * sc.R(j, b, c);
            for (int k = 0; k < n0; ++k) s -= sc.f(i, j, k) * sc.R(k, a, c);
            if (!s.is_zero()) record(tuple({i, j, a, c}), s);
          }
    });
    rep.instances = static_cast<std::size_t>(n0) * n0 * n1 * n1;
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.equivariance",
                    "R_ia^e Q_ebc^j + R_ib^e Q_aec^j + R_ic^e Q_abe^j = Q_abc^k f_ik^j");
    rep.note("implied by g1 being a g0-module with g0 inside S^3(g1); not a displayed identity");
    ScopedTimer timer(rep);
    Recorder record(rep);
    parallel_for(static_cast<std::size_t>(n0), [&](std::size_t iu) {
      const int i = static_cast<int>(iu);
      for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b)
          for (int c = 0; c < n1; ++c)
            for (int j = 0; j < n0; ++j) {
              Rational s;
              for (int e = 0; e < n1; ++e)
                s += sc.R(i, a, e) * sc.Q(e, b, c, j) + sc.R(i, b, e) * sc.Q(a, e, c, j) +
                     sc.R(i, c, e) * sc.Q(a, b, e, j);
              for (int k = 0; k < n0; ++k) s -= sc.Q(a, b, c, k) * sc.f(i, k, j);
              if (!s.is_zero()) record(tuple({i, a, b, c, j}), s);
            }
    });
    rep.instances = static_cast<std::size_t>(n0) * n1 * n1 * n1 * n0;
    timer.stop();
    out.push_back(std::move(rep));
  }
  {
    CheckReport rep("order3.fundamental",
                    "Q_bcd^i R_ia^e + Q_cda^i R_ib^e + Q_dab^i R_ic^e + Q_abc^i R_id^e = 0");
    ScopedTimer timer(rep);
    Recorder record(rep);
    parallel_for(static_cast<std::size_t>(n1), [&](std::size_t au) {
      const int a = static_cast<int>(au);
      for (int b = 0; b < n1; ++b)
        for (int c = 0; c < n1; ++c)
          for (int d = 0; d < n1; ++d)
            for (int e = 0; e < n1; ++e) {
              Rational s;
              for (int i = 0; i < n0; ++i)
                s += sc.Q(b, c, d, i) * sc.R(i, a, e) + sc.Q(c, d, a, i) * sc.R(i, b, e) +
                     sc.Q(d, a, b, i) * sc.R(i, c, e) + sc.Q(a, b, c, i) * sc.R(i, d, e);
              if (!s.is_zero()) record(tuple({a, b, c, d, e}), s);
            }
    });
    rep.instances = static_cast<std::size_t>(n1) * n1 * n1 * n1 * n1;
    timer.stop();
    out.push_back(std::move(rep));
  }
  for (auto& rep : out)
    std::sort(rep.residuals.begin(), rep.residuals.end(),
              [](const Residual& x, const Residual& y) { return x.indices < y.indices; });
  return out;
}

CheckReport check_lie_order3(const StructureConstants3& sc) {
  CheckReport merged("order3.axioms", "");
  std::string ref;
  for (auto& part : check_lie_order3_parts(sc)) {
    const std::string name = part.check_id.substr(part.check_id.find('.') + 1);
    ref += (ref.empty() ? "" : "; ") + part.paper_ref;
    merged.instances += part.instances;
    merged.elapsed_ms += part.elapsed_ms;
    merged.residual_total += part.residual_total - part.residuals.size();
    for (auto& r : part.residuals) merged.add_residual(name + " " + r.indices, r.element);
    for (auto& n : part.notes) merged.note(name + ": " + n);
  }
  merged.paper_ref = ref;
  return merged;
}

// ---------------------------------------------------------------------------

int lorentz_index(int dimension, int mu, int nu) {
  if (!(0 <= mu && mu < nu && nu < dimension)) throw std::out_of_range("lorentz_index needs 0 <= mu < nu < d");
  int idx = 0;
  for (int m = 0; m < mu; ++m) idx += dimension - 1 - m;
  return idx + (nu - mu - 1);
}

StructureConstants3 cubic_poincare(const MetricSignature& metric) {
  const int d = metric.dimension;
  const int nl = d * (d - 1) / 2;
  StructureConstants3 sc(nl + d, d);
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) sc.labels0[static_cast<std::size_t>(lorentz_index(d, m, n))] =
        "L_" + std::to_string(m) + std::to_string(n);
  for (int m = 0; m < d; ++m) {
    sc.labels0[static_cast<std::size_t>(nl + m)] = "P_" + std::to_string(m);
    sc.labels1[static_cast<std::size_t>(m)] = "V_" + std::to_string(m);
  }
  auto eta = [&](int a, int b) { return metric(a, b); };
  auto P = [&](int m) { return nl + m; };
  // Adds c * L_ab to the row (i,j) of f, for any a != b.
  auto add_L = [&](int i, int j, int a, int b, int c) {
    if (a == b || c == 0) return;
    int sign = a < b ? 1 : -1;
    sc.f(i, j, lorentz_index(d, std::min(a, b), std::max(a, b))) += Rational(sign * c);
  };

  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) {
      const int i = lorentz_index(d, m, n);
      for (int r = 0; r < d; ++r)
        for (int s = r + 1; s < d; ++s) {
          const int j = lorentz_index(d, r, s);
          add_L(i, j, r, m, eta(n, s));
          add_L(i, j, r, n, -eta(m, s));
          add_L(i, j, m, s, eta(n, r));
          add_L(i, j, n, s, -eta(m, r));
        }
      for (int r = 0; r < d; ++r) {
        if (eta(n, r) != 0) sc.set_f(i, P(r), P(m), Rational(eta(n, r)));
        if (eta(m, r) != 0) sc.set_f(i, P(r), P(n), Rational(-eta(m, r)));
        if (eta(n, r) != 0) sc.R(i, r, m) += Rational(eta(n, r));
        if (eta(m, r) != 0) sc.R(i, r, n) += Rational(-eta(m, r));
      }
    }
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
          int v = eta(m, n) * (r == s) + eta(m, r) * (n == s) + eta(r, n) * (m == s);
          if (v != 0) sc.Q(m, n, r, P(s)) = Rational(v);
        }
  return sc;
}

CheckReport check_against_superspace(const StructureConstants3& sc, const SuperspaceAlgebra& alg) {
  CheckReport rep("order3.against_superspace",
                  "[X_i, X_j] = f_ij^k X_k and [X_i, theta_r] = R_ir^b theta_b with X = L_mn, P_m realised on the "
                  "ternary superspace");
  ScopedTimer timer(rep);
  const int d = alg.dimension();
  const int nl = d * (d - 1) / 2;
  if (sc.dim0() != nl + d || sc.dim1() != d) {
    rep.add_residual("shape", "structure constants have dim0=" + std::to_string(sc.dim0()) +
                                  ", dim1=" + std::to_string(sc.dim1()) + " for dimension " + std::to_string(d));
    return rep;
  }
  std::vector<Element> X;
  X.resize(static_cast<std::size_t>(nl + d), alg.zero());
  for (int m = 0; m < d; ++m)
    for (int n = m + 1; n < d; ++n) X[static_cast<std::size_t>(lorentz_index(d, m, n))] = lorentz_generator(alg, m, n);
  for (int m = 0; m < d; ++m) X[static_cast<std::size_t>(nl + m)] = alg.P(m);
  auto as_cyclo = [](const Rational& r) { return Cyclo(r); };

  for (int i = 0; i < sc.dim0(); ++i)
    for (int j = 0; j < sc.dim0(); ++j) {
      ++rep.instances;
      Element expected = alg.zero();
      for (int k = 0; k < sc.dim0(); ++k)
        if (!sc.f(i, j, k).is_zero()) expected += as_cyclo(sc.f(i, j, k)) * X[static_cast<std::size_t>(k)];
      Element res = commutator(X[static_cast<std::size_t>(i)], X[static_cast<std::size_t>(j)]) - expected;
      if (!res.is_zero())
        rep.add_residual("[" + sc.labels0[static_cast<std::size_t>(i)] + "," + sc.labels0[static_cast<std::size_t>(j)] + "]",
                         res.to_string());
    }
  for (int i = 0; i < sc.dim0(); ++i)
    for (int a = 0; a < d; ++a) {
      ++rep.instances;
      Element expected = alg.zero();
      for (int b = 0; b < d; ++b)
        if (!sc.R(i, a, b).is_zero()) expected += as_cyclo(sc.R(i, a, b)) * alg.theta_lower(b);
      Element res = commutator(X[static_cast<std::size_t>(i)], alg.theta_lower(a)) - expected;
      if (!res.is_zero())
        rep.add_residual("[" + sc.labels0[static_cast<std::size_t>(i)] + ",theta_" + std::to_string(a) + "]",
                         render_collapsed(alg, res));
    }
  return rep;
}

}  // namespace ternalg
