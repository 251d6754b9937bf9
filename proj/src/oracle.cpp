#include "ternalg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

#include "ternalg/parallel.hpp"

namespace ternalg {

SparseMatrix SparseMatrix::identity(std::size_t dimension) {
  SparseMatrix m(dimension);
  for (std::uint32_t i = 0; i < dimension; ++i) m.entries_.emplace(std::make_pair(i, i), Cyclo(1));
  return m;
}

Cyclo SparseMatrix::at(std::uint32_t row, std::uint32_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Cyclo() : it->second;
}

void SparseMatrix::add(std::uint32_t row, std::uint32_t col, const Cyclo& value) {
  if (value.is_zero()) return;
  if (row >= dim_ || col >= dim_) throw std::out_of_range("matrix entry outside the dimension");
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::check_same(const SparseMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimensions differ");
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  check_same(o);
  for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  check_same(o);
  for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, Cyclo(-1) * v);
  return *this;
}

SparseMatrix operator*(const Cyclo& c, const SparseMatrix& m) {
  SparseMatrix r(m.dim_);
  if (c.is_zero()) return r;
  for (const auto& [rc, v] : m.entries_) r.entries_.emplace(rc, c * v);
  return r;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  a.check_same(b);
  std::vector<std::vector<std::pair<std::uint32_t, const Cyclo*>>> b_rows(b.dim_);
  for (const auto& [rc, v] : b.entries_) b_rows[rc.first].emplace_back(rc.second, &v);
  SparseMatrix r(a.dim_);
  for (const auto& [rc, v] : a.entries_)
    for (const auto& [col, w] : b_rows[rc.second]) r.add(rc.first, col, v * *w);
  return r;
}

// ---------------------------------------------------------------------------

MatrixRep build_rep(const SuperspaceAlgebra& alg, const std::vector<ParaName>& subset) {
  const int n = static_cast<int>(subset.size());
  const int modes = SuperspaceConfig::kGreenOrder * n;
  if ((std::size_t{1} << modes) > MatrixRep::kMaxDimension)
    throw OracleError("subset of " + std::to_string(n) + " names needs " + std::to_string(modes) +
                      " modes; at most 12 are supported");
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (subset[i] == subset[j]) throw OracleError("subset repeats " + subset[i].label());

  MatrixRep rep;
  rep.subset = subset;
  rep.system = alg.system();
  rep.dimension = std::size_t{1} << modes;
  const bool global_chain = alg.config().cross_sign == -1;
  auto mode = [&](int green, int i) { return green * n + i; };
  rep.chain.resize(static_cast<std::size_t>(modes));
  for (int m = 0; m < modes; ++m) {
    const int first = global_chain ? 0 : (m / n) * n;
    std::uint32_t mask = 0;
    for (int k = first; k < m; ++k) mask |= 1u << k;
    rep.chain[static_cast<std::size_t>(m)] = mask;
  }

  for (int g = 0; g < SuperspaceConfig::kGreenOrder; ++g)
    for (int i = 0; i < n; ++i) {
      const ParaName& name = subset[static_cast<std::size_t>(i)];
      std::vector<MatrixRep::ModeOp> ops{{true, mode(g, i), Rational(1)}};
      if (name.cls == ParaClass::kDel) {
        for (int j = 0; j < n; ++j)
          if (alg.pairing(name.index, subset[static_cast<std::size_t>(j)]))
            ops.push_back({false, mode(g, j), alg.config().pairing_kappa});
      }
      rep.ops.emplace(alg.component(name, g), std::move(ops));
    }

  for (const auto& [gen, ops] : rep.ops) {
    SparseMatrix m(rep.dimension);
    for (std::uint32_t s = 0; s < rep.dimension; ++s)
      for (const auto& op : ops) {
        const std::uint32_t bit = 1u << op.mode;
        if (static_cast<bool>(s & bit) == op.create) continue;
        const int sign = (std::popcount(s & rep.chain[static_cast<std::size_t>(op.mode)]) & 1) ? -1 : 1;
        m.add(s ^ bit, s, Cyclo(Rational(sign) * op.coeff));
      }
    rep.matrices.emplace(gen, std::move(m));
  }
  return rep;
}

const std::vector<MatrixEvaluator::WordEntry>& MatrixEvaluator::word(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  std::vector<const std::vector<MatrixRep::ModeOp>*> letters;
  for (std::size_t k = 0; k < m.size(); ++k) {
    auto op = rep_.ops.find(m[k]);
    if (op == rep_.ops.end())
      throw OracleError("generator " + rep_.system->name(m[k]) + " is not part of the matrix representation");
    letters.push_back(&op->second);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> acc;
  std::vector<std::pair<std::uint32_t, Rational>> paths, next;
  for (std::uint32_t col = 0; col < rep_.dimension; ++col) {
    paths.assign(1, {col, Rational(1)});
    for (std::size_t k = letters.size(); k-- > 0 && !paths.empty();) {
      next.clear();
      for (const auto& [s, c] : paths)
        for (const auto& op : *letters[k]) {
          const std::uint32_t bit = 1u << op.mode;
          if (static_cast<bool>(s & bit) == op.create) continue;
          const bool odd = std::popcount(s & rep_.chain[static_cast<std::size_t>(op.mode)]) & 1;
          Rational v = c * op.coeff;
          next.emplace_back(s ^ bit, odd ? -v : v);
        }
      paths.swap(next);
    }
    for (const auto& [s, c] : paths) acc[{s, col}] += c;
  }
  std::vector<WordEntry> entries;
  for (const auto& [rc, v] : acc)
    if (!v.is_zero()) entries.push_back({rc.first, rc.second, v});
  return cache_.emplace(m, std::move(entries)).first->second;
}

SparseMatrix MatrixEvaluator::evaluate(const Element& e) {
  if (e.system() != rep_.system) throw IncompatibleSystems();
  SparseMatrix r(rep_.dimension);
  for (const auto& [m, c] : e.terms())
    for (const auto& entry : word(m)) r.add(entry.row, entry.col, c * Cyclo(entry.value));
  return r;
}

// ---------------------------------------------------------------------------

CheckReport check_rep_invariants(const MatrixRep& rep) {
  std::string subset = "{";
  for (std::size_t i = 0; i < rep.subset.size(); ++i) subset += (i ? "," : "") + rep.subset[i].label();
  subset += "}";
  CheckReport report("oracle.rep_invariants", "u v - s(u,v) v u = c(u,v) 1 and u u = 0 on the matrices of every Green component");
  ScopedTimer timer(report);
  const SparseMatrix id = SparseMatrix::identity(rep.dimension);
  for (auto u = rep.matrices.begin(); u != rep.matrices.end(); ++u) {
    ++report.instances;
    if (!(u->second * u->second).is_zero())
      report.add_residual(subset + " " + rep.system->name(u->first) + "^2", "nonzero matrix");
    for (auto v = rep.matrices.begin(); v != u; ++v) {
      ++report.instances;
      // u comes after v in canonical order
      const Cyclo sign(rep.system->swap_sign(u->first, v->first));
      const Cyclo& contraction = rep.system->contraction(u->first, v->first);
      SparseMatrix res = u->second * v->second - sign * (v->second * u->second) - contraction * id;
      if (!res.is_zero())
        report.add_residual(subset + " " + rep.system->name(u->first) + "," + rep.system->name(v->first),
                            std::to_string(res.entries().size()) + " nonzero entries");
    }
  }
  return report;
}

CheckReport cross_check(const Element& e, const MatrixRep& rep) {
  CheckReport report("oracle.cross_check", "matrix(raw words of e) = matrix(normal_form(e)); normal_form(e) = 0 => matrix(e) = 0");
  ScopedTimer timer(report);
  MatrixEvaluator eval(rep);
  ++report.instances;
  SparseMatrix raw = eval.evaluate(e);
  Element nf = normal_form(e);
  SparseMatrix reduced = eval.evaluate(nf);
  if (raw != reduced)
    report.add_residual(e.to_string(), "raw and normal-form matrices differ in " +
                                           std::to_string((raw - reduced).entries().size()) + " entries");
  if (nf.is_zero() && !raw.is_zero()) report.add_residual(e.to_string(), "symbolic zero with nonzero matrix");
  return report;
}

Element random_element(const MatrixRep& rep, std::mt19937_64& rng, int max_degree, int max_terms) {
  std::vector<GeneratorId> letters;
  for (const auto& [g, m] : rep.matrices) letters.push_back(g);
  std::uniform_int_distribution<int> n_terms(1, std::max(1, max_terms));
  std::uniform_int_distribution<int> length(0, std::max(0, max_degree));
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  Element e(rep.system);
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial::Storage w;
    const int len = letters.empty() ? 0 : length(rng);
    for (int k = 0; k < len; ++k) w.push_back(letters[letter(rng)].index);
    Cyclo c;
    while (c.is_zero()) c = Cyclo(Rational(small(rng), den(rng)), Rational(small(rng)));
    e.add_term(Monomial(std::move(w)), c);
  }
  return e;
}

// ---------------------------------------------------------------------------

namespace {

std::string subset_label(const std::vector<ParaName>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + subset[i].label();
  return s + "}";
}

struct SubsetOutcome {
  std::vector<Residual> invariants, equivalence, relations, homomorphism;
  std::size_t n_invariants = 0, n_equivalence = 0, n_relations = 0, n_homomorphism = 0;
  std::size_t symbolic_zero = 0;
};

}  // namespace

std::vector<CheckReport> run_oracle_sweep(const SuperspaceAlgebra& alg, const OracleSweepOptions& options) {
  const auto& names = alg.para_names();
  std::vector<std::vector<ParaName>> subsets;
  {
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (!pick.empty()) {
        std::vector<ParaName> s;
        for (auto i : pick) s.push_back(names[i]);
        subsets.push_back(std::move(s));
      }
      if (static_cast<int>(pick.size()) == options.max_names) return;
      for (std::size_t i = start; i < names.size(); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::map<std::vector<ParaName>, std::size_t> subset_index;
  for (std::size_t i = 0; i < subsets.size(); ++i) subset_index.emplace(subsets[i], i);

  std::vector<std::vector<RelationInstance>> relations(subsets.size());
  std::size_t unplaced = 0, too_wide = 0;
  auto place = [&](const RelationInstance& inst) {
    std::vector<ParaName> key = inst.names;
    std::sort(key.begin(), key.end(), [&](const ParaName& a, const ParaName& b) {
      return std::find(names.begin(), names.end(), a) < std::find(names.begin(), names.end(), b);
    });
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (static_cast<int>(key.size()) > options.max_names) {
      ++too_wide;
      return;
    }
    auto it = subset_index.find(key);
    if (it == subset_index.end()) {
      ++unplaced;
      return;
    }
    relations[it->second].push_back(inst);
  };
  for_each_parafermion_relation(alg, place);
  for_each_roby_relation(alg, place);

  CheckReport inv("oracle.rep_invariants",
                  "matrices of the Green components obey u v - s(u,v) v u = c(u,v) 1 and u u = 0");
  CheckReport eq("oracle.random_equivalence",
                 "matrix(raw words of e) = matrix(normal_form(e)) for seeded random e of degree <= " +
                     std::to_string(options.max_degree));
  CheckReport rel("oracle.relation_zero", "every parafermion and cube relation instance maps to the zero matrix");
  CheckReport hom("oracle.homomorphism", "matrix(a b) = matrix(a) matrix(b) for seeded random a, b");
  ScopedTimer timer(eq);

  std::vector<SubsetOutcome> outcomes(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t si) {
    const auto& subset = subsets[si];
    SubsetOutcome& out = outcomes[si];
    const std::string label = subset_label(subset);
    MatrixRep rep = build_rep(alg, subset);
    CheckReport ri = check_rep_invariants(rep);
    out.n_invariants = ri.instances;
    out.invariants = ri.residuals;
    MatrixEvaluator eval(rep);
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(si)};
    std::mt19937_64 rng(seq);
    for (int k = 0; k < options.samples; ++k) {
      ++out.n_equivalence;
      Element e = random_element(rep, rng, options.max_degree, 3);
      Element nf = normal_form(e);
      SparseMatrix raw = eval.evaluate(e);
      if (nf.is_zero()) ++out.symbolic_zero;
      if (raw != eval.evaluate(nf)) out.equivalence.push_back({label + " sample " + std::to_string(k), e.to_string()});
    }
    for (int k = 0; k < options.homomorphism_pairs; ++k) {
      ++out.n_homomorphism;
      Element a = random_element(rep, rng, 2, 2);
      Element b = random_element(rep, rng, 2, 2);
      if (eval.evaluate(a * b) != eval.evaluate(a) * eval.evaluate(b))
        out.homomorphism.push_back({label + " pair " + std::to_string(k), a.to_string() + " ; " + b.to_string()});
    }
    for (const auto& inst : relations[si]) {
      ++out.n_relations;
      if (!eval.evaluate(inst.residual).is_zero())
        out.relations.push_back({inst.family + " " + inst.indices, "nonzero matrix"});
    }
  });

  std::size_t symbolic_zero = 0;
  for (const auto& out : outcomes) {
    inv.instances += out.n_invariants;
    eq.instances += out.n_equivalence;
    rel.instances += out.n_relations;
    hom.instances += out.n_homomorphism;
    symbolic_zero += out.symbolic_zero;
    for (const auto& r : out.invariants) inv.add_residual(r.indices, r.element);
    for (const auto& r : out.equivalence) eq.add_residual(r.indices, r.element);
    for (const auto& r : out.relations) rel.add_residual(r.indices, r.element);
    for (const auto& r : out.homomorphism) hom.add_residual(r.indices, r.element);
  }
  if (unplaced) rel.add_residual("placement", std::to_string(unplaced) + " relation instances matched no subset");
  if (too_wide)
    rel.note(std::to_string(too_wide) + " instances involve more than " + std::to_string(options.max_names) +
             " names and were skipped");
  eq.note(std::to_string(subsets.size()) + " subsets of at most " + std::to_string(options.max_names) + " names, " +
          std::to_string(options.samples) + " samples each; " + std::to_string(symbolic_zero) +
          " samples were symbolically zero");
  timer.stop();
  return {std::move(hom), std::move(inv), std::move(eq), std::move(rel)};
}

}  // namespace ternalg
