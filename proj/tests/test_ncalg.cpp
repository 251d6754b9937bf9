#include <gtest/gtest.h>

#include <random>

#include "ternalg/ncalg.hpp"
#include "ternalg/paraspace.hpp"

using namespace ternalg;

namespace {

// Fermions a, b, c with {b, a} = 1, and a boson pair [p, y] = 1 with star(p) = -p.
struct Toy {
  SystemPtr sys;
  GeneratorId a, b, c, y, p;

  Toy() {
    GeneratorSystem::Builder builder;
    a = builder.add("a", true, SquareRule::kZero);
    b = builder.add("b", true, SquareRule::kZero);
    c = builder.add("c", true, SquareRule::kZero);
    y = builder.add("y", false, SquareRule::kFree);
    p = builder.add("p", false, SquareRule::kFree);
    builder.set_swap_sign(a, b, -1);
    builder.set_swap_sign(a, c, -1);
    builder.set_swap_sign(b, c, -1);
    builder.set_contraction(b, a, Cyclo(1));
    builder.set_contraction(p, y, Cyclo(1));
    builder.set_star_sign(p, -1);
    sys = std::move(builder).build();
  }

  Element gen(GeneratorId g) const { return Element::generator(sys, g); }
  Element one() const { return Element::scalar(sys, Cyclo(1)); }
};

Element random_element(const SystemPtr& sys, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(sys->size()) - 1);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, 4);
  Element e(sys);
  for (int t = terms(rng); t > 0; --t) {
    Monomial m;
    for (int k = degree(rng); k > 0; --k) m.push_back({static_cast<std::uint8_t>(letter(rng))});
    e.add_term(m, Cyclo(coeff(rng), coeff(rng)));
  }
  return e;
}

int fermion_parity(const GeneratorSystem& sys, const Monomial& m) {
  int n = 0;
  for (std::size_t i = 0; i < m.size(); ++i) n += sys.is_fermionic(m[i]);
  return n % 2;
}

}  // namespace

TEST(Builder, RejectsInconsistentTables) {
  {
    GeneratorSystem::Builder b;
    auto u = b.add("u", true, SquareRule::kZero);
    auto v = b.add("v", true, SquareRule::kZero);
    b.set_swap_sign(u, v, 1);
    b.set_contraction(v, u, Cyclo(1));
    // u v u reduces to u or to -u depending on the first swap.
    EXPECT_THROW(std::move(b).build(), InconsistentRules);
  }
  {
    GeneratorSystem::Builder b;
    auto u = b.add("u", false, SquareRule::kFree);
    EXPECT_THROW(b.add("u", false, SquareRule::kFree), InconsistentRules);
    EXPECT_THROW(b.set_swap_sign(u, u, -1), InconsistentRules);
  }
  {
    GeneratorSystem::Builder b;
    auto u = b.add("u", false, SquareRule::kFree);
    auto v = b.add("v", false, SquareRule::kFree);
    EXPECT_THROW(b.set_swap_sign(u, v, 2), InconsistentRules);
    EXPECT_THROW(b.set_contraction(u, v, Cyclo(1)), InconsistentRules);
    EXPECT_THROW(b.set_star_sign(u, 0), std::invalid_argument);
  }
}

TEST(Builder, LooksUpNames) {
  Toy t;
  EXPECT_EQ(t.sys->find("y")->index, t.y.index);
  EXPECT_FALSE(t.sys->find("nope").has_value());
  EXPECT_EQ(t.sys->name(t.p), "p");
}

TEST(Multiply, HeisenbergAndSquares) {
  Toy t;
  EXPECT_EQ(t.one() * t.gen(t.y), t.gen(t.y));
  Element py = t.gen(t.p) * t.gen(t.y);
  Element expected = Element::word(t.sys, Monomial{t.y, t.p}) + t.one();
  EXPECT_EQ(py.terms(), expected.terms());
  EXPECT_TRUE((t.gen(t.a) * t.gen(t.a)).is_zero());
  EXPECT_EQ(anticommutator(t.gen(t.b), t.gen(t.a)), t.one());
  EXPECT_EQ(commutator(t.gen(t.p), t.gen(t.y)), t.one());
}

TEST(Multiply, RejectsMixedSystems) {
  Toy t1, t2;
  EXPECT_THROW(t1.gen(t1.a) * t2.gen(t2.a), IncompatibleSystems);
  EXPECT_THROW(t1.gen(t1.a) + t2.gen(t2.a), IncompatibleSystems);
}

TEST(NormalForm, RearrangedHeisenbergIsZero) {
  Toy t;
  Element e = Element::word(t.sys, Monomial{t.y, t.p}) - Element::word(t.sys, Monomial{t.p, t.y}) + t.one();
  EXPECT_FALSE(e.is_normal());
  EXPECT_TRUE(normal_form(e).is_zero());
}

TEST(NormalForm, IdempotentAndStrategyIndependent) {
  Toy t;
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    Element e = random_element(t.sys, rng, 5);
    Element nf = normal_form(e);
    ASSERT_EQ(normal_form(nf).terms(), nf.terms());
    ASSERT_TRUE(nf.is_normal());
    ASSERT_EQ(reduce_with_strategy(e, Strategy::kLeftmost).terms(), nf.terms());
    ASSERT_EQ(reduce_with_strategy(e, Strategy::kRightmost).terms(), nf.terms());
    ASSERT_EQ(reduce_with_strategy(e, Strategy::kRandom, k).terms(), nf.terms());
  }
}

TEST(NormalForm, HomomorphismAndParity) {
  Toy t;
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    Element a = random_element(t.sys, rng, 4), b = random_element(t.sys, rng, 4);
    ASSERT_EQ(normal_form(raw_product(a, b)).terms(), (normal_form(a) * normal_form(b)).terms());
    for (const auto& [m, c] : a.terms()) {
      Element nf = normal_form(Element::word(t.sys, m, c));
      for (const auto& [m2, c2] : nf.terms()) {
        ASSERT_EQ(fermion_parity(*t.sys, m2), fermion_parity(*t.sys, m));
        ASSERT_EQ((m.size() - m2.size()) % 2, 0u);
        ASSERT_LE(m2.size(), m.size());
      }
    }
  }
}

TEST(Brackets, CommutatorLaws) {
  Toy t;
  std::mt19937_64 rng(29);
  for (int k = 0; k < 50; ++k) {
    Element a = random_element(t.sys, rng, 3), b = random_element(t.sys, rng, 3), s = random_element(t.sys, rng, 2);
    ASSERT_TRUE(commutator(a, a).is_zero());
    ASSERT_EQ(commutator(a, b), -commutator(b, a));
    ASSERT_EQ(commutator(a, b), normal_form(raw_commutator(a, b)));
    ASSERT_EQ(commutator(a, b * s), commutator(a, b) * s + b * commutator(a, s));
  }
}

TEST(Brackets, Sym3) {
  Toy t;
  Element y = t.gen(t.y);
  EXPECT_EQ(sym3(y, y, y), Cyclo(6) * (y * y * y));
  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    Element a = random_element(t.sys, rng, 2), b = random_element(t.sys, rng, 2), c = random_element(t.sys, rng, 2);
    Element s = sym3(a, b, c);
    ASSERT_EQ(s, sym3(b, c, a));
    ASSERT_EQ(s, sym3(c, b, a));
    ASSERT_EQ(s, sym3(a, c, b));
    ASSERT_EQ(s, normal_form(raw_sym3(a, b, c)));
  }
}

TEST(Brackets, Colour3) {
  Toy t;
  const Cyclo q = Cyclo::q(), q2 = Cyclo::q2();
  Element a = t.gen(t.y), b = t.gen(t.p), c = t.gen(t.a);
  Weights6 ones{Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1)};
  EXPECT_EQ(colour3(a, b, c, ones), sym3(a, b, c));
  Weights6 w{Cyclo(1), q2, q2, q, q, Cyclo(1)};
  Element expected = a * b * c + q2 * (b * c * a) + q2 * (c * a * b) + q * (a * c * b) + q * (b * a * c) + c * b * a;
  EXPECT_EQ(colour3(a, b, c, w), expected);
  EXPECT_TRUE(colour3(a, a, a, w).is_zero());
}

TEST(Star, Laws) {
  Toy t;
  const Cyclo q = Cyclo::q();
  Element u = t.gen(t.a), v = t.gen(t.c);
  Element quv = q * raw_product(u, v);
  EXPECT_EQ(star(quv), Cyclo::q2() * (v * u));
  EXPECT_EQ(star(commutator(u, v)), -commutator(u, v));
  std::mt19937_64 rng(37);
  for (int k = 0; k < 100; ++k) {
    Element a = random_element(t.sys, rng, 3), b = random_element(t.sys, rng, 3);
    Cyclo lambda(k % 5 - 2, k % 3 - 1);
    ASSERT_EQ(star(star(a)), normal_form(a));
    ASSERT_EQ(star(a * b), star(b) * star(a));
    ASSERT_EQ(star(lambda * a), lambda.conj() * star(a));
  }
}

TEST(NestedAction, SingleAndTriple) {
  Toy t;
  Element a = t.gen(t.p), target = t.gen(t.y) * t.gen(t.y);
  std::vector<Element> one{a};
  EXPECT_EQ(nested_action(one, target), commutator(a, target));
  std::vector<Element> two{a, a};
  EXPECT_EQ(nested_action(two, target), Cyclo(2) * t.one());
}

TEST(Render, CanonicalText) {
  Toy t;
  Element e = Cyclo(1, 2) * (t.gen(t.y) * t.gen(t.a)) + Cyclo(Rational(-1, 2)) * t.gen(t.b);
  EXPECT_EQ(e.to_string(), "(1+2*q)*a*y - 1/2*b");
  EXPECT_EQ((t.gen(t.p) * t.gen(t.y)).to_string(), "1 + y*p");
  EXPECT_EQ(Element(t.sys).to_string(), "0");
}

TEST(Superspace, EngineExamples) {
  SuperspaceConfig cfg;
  auto alg = SuperspaceAlgebra::build(cfg);
  EXPECT_EQ(commutator(alg.P(0), alg.x(0)), alg.scalar(Cyclo(1)));
  EXPECT_TRUE(commutator(alg.P(0), alg.x(1)).is_zero());
  EXPECT_TRUE(sym3(alg.theta(0), alg.theta(1), alg.theta(2)).is_zero());
  Element u = alg.theta(0);
  EXPECT_TRUE(colour3(u, u, u, {Cyclo(1), Cyclo::q2(), Cyclo::q2(), Cyclo::q(), Cyclo::q(), Cyclo(1)}).is_zero());
}
