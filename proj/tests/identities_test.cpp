#include "blockmod/identities.hpp"

#include <gtest/gtest.h>

#include "blockmod/parse.hpp"
#include "blockmod/random.hpp"

namespace blockmod {
namespace {

Poly2 XY(const char* s) {
  // X, Y written as d1, d2 in the shared two-variable parser.
  return parse_poly2(s);
}

TEST(LemmaPoly, BuildExample) {
  // a=2, b=4, c=1, f=0: F = (4XY + 4Y + 4Y^2) / 2.
  const Poly2 F = lemma_poly_build(Poly1(), Rational(2), Rational(4), Rational(1));
  EXPECT_EQ(F, XY("2*d1*d2 + 2*d2 + 2*d2^2"));
  EXPECT_TRUE(lemma_poly_check(F, Rational(2), Rational(4), Rational(1)));
}

TEST(LemmaPoly, CheckExamples) {
  EXPECT_FALSE(lemma_poly_check(XY("d1*d2^2"), Rational(0), Rational(0), Rational(1)));
  // Pure f(X) part is annihilated by the difference.
  EXPECT_TRUE(lemma_poly_check(XY("d1^3"), Rational(0), Rational(0), Rational(2)));
  EXPECT_THROW(lemma_poly_build(Poly1(), Rational(1), Rational(1), Rational(0)), MathError);
  EXPECT_THROW(lemma_poly_check(Poly2(), Rational(1), Rational(1), Rational(0)), MathError);
}

TEST(LemmaPoly, BuiltPolynomialsSatisfyIdentityPointwise) {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_nonzero_rational(rng);
    const Poly2 F = lemma_poly_build(random_poly1(rng, 3), a, b, c);
    EXPECT_TRUE(lemma_poly_check(F, a, b, c));
    // Oracle: evaluate both sides at a random point.
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    EXPECT_EQ(evaluate(F, x, y) - evaluate(F, x, y - c), a * x + b * y);
  }
}

TEST(LemmaPoly, CubicPerturbationRejected) {
  SplitMix64 rng(32);
  for (int iter = 0; iter < 20; ++iter) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_nonzero_rational(rng);
    Poly2 F = lemma_poly_build(random_poly1(rng, 3), a, b, c);
    F.add_term({0, 3}, random_nonzero_rational(rng));
    EXPECT_FALSE(lemma_poly_check(F, a, b, c));
  }
}

TEST(ReplayGG, CanonicalRuleVanishesOnBox) {
  SplitMix64 rng(40);
  for (const ParamSet& p : standard_param_sweep(rng))
    for (IndexPair m : index_box(2))
      for (IndexPair n : index_box(2)) ASSERT_TRUE(replay_gg(m, n, p).is_zero()) << p.str() << m << n;
}

TEST(ReplayGG, TransposedRuleIsDetected) {
  const ParamSet p(Rational(1), Rational(1), Rational(1), Rational(1, 2));
  bool found = false;
  for (IndexPair m : index_box(1))
    for (IndexPair n : index_box(1)) found = found || !replay_gg(m, n, p, ActionRule::transposed).is_zero();
  EXPECT_TRUE(found);

  const ParamSet at_one(Rational(2), Rational(3), Rational(-1), Rational(1));
  for (IndexPair m : index_box(1))
    for (IndexPair n : index_box(1)) EXPECT_TRUE(replay_gg(m, n, at_one, ActionRule::transposed).is_zero());
}

TEST(ReplayG, Example) {
  const ParamSet p(Rational(1), Rational(1), Rational(1), Rational(0));
  // g_(1,0) = d1 - d2, g_(-1,0) = d1 + d2; G = (d1 + 1 - d2)(d1 + d2).
  EXPECT_EQ(product_g({1, 0}, p), XY("d1^2 + d1 + d2 - d2^2"));
  EXPECT_TRUE(replay_G({1, 0}, p).is_zero());
}

TEST(ReplayG, VanishesOverSweep) {
  SplitMix64 rng(41);
  for (const ParamSet& p : standard_param_sweep(rng))
    for (IndexPair m : index_box(3)) EXPECT_TRUE(replay_G(m, p).is_zero()) << p.str() << m;
}

TEST(ReplayFh, Example) {
  const ParamSet p(Rational(1), Rational(1), Rational(1), Rational(0));
  const FhReplay r = replay_Fh({1, 0}, p);
  EXPECT_FALSE(r.defect);
  // Hand computation: X = -d2, G = d1^2 + d1 - X - X^2.
  EXPECT_EQ(r.h, parse_poly1("-t - t^2"));
  EXPECT_TRUE(r.matches_expected);
  EXPECT_THROW(replay_Fh({0, 1}, p), MathError);
}

TEST(ReplayFh, MatchesPointwiseOracle) {
  SplitMix64 rng(42);
  for (int iter = 0; iter < 30; ++iter) {
    const ParamSet p = random_params(rng);
    const long magnitude = rng.uniform(1, 3);
    const long m1 = rng.uniform(0, 1) ? magnitude : -magnitude;
    const IndexPair m{m1, rng.uniform(-3, 3)};
    const FhReplay r = replay_Fh(m, p);
    EXPECT_FALSE(r.defect) << p.str() << m;
    EXPECT_TRUE(r.matches_expected) << p.str() << m;
    // Points on the line X_m = x: d2 = (m2 d1 - x) / m1.
    const Poly2 G = product_g(m, p);
    const Rational x = random_rational(rng);
    for (int k = 0; k < 2; ++k) {
      const Rational u = random_rational(rng);
      const Rational v = (Rational(m.m2) * u - x) / Rational(m.m1);
      const Rational lhs = evaluate(G, u, v) - p.q() * p.q() * u * (u + Rational(m.m1));
      EXPECT_EQ(lhs, evaluate(r.h, x));
    }
  }
}

TEST(ReplayP1P2Const, CanonicalWitnessMatchesAction) {
  SplitMix64 rng(43);
  for (const ParamSet& p : standard_param_sweep(rng))
    for (IndexPair m : index_box(2)) {
      const ClassificationWitness w = canonical_witness(m, p);
      const Poly2 g = w.lambda_m * (p.q() * (d1() - Poly2(Rational(m.m1) * w.alpha_m)) + w.a_m * x_m(m) + Poly2(w.b_m));
      EXPECT_EQ(g, action_on_one(m, p)) << m;
    }
}

TEST(ReplayP1P2Const, Example) {
  const ParamSet p(Rational(1), Rational(1), Rational(1), Rational(0));
  EXPECT_TRUE(replay_p1p2const({1, 0}, {0, 1}, p).all_zero());
  EXPECT_THROW(replay_p1p2const({0, 0}, {0, 1}, p), MathError);
}

TEST(ReplayP1P2Const, CanonicalWitnessSatisfiesConstraints) {
  SplitMix64 rng(44);
  for (const ParamSet& p : standard_param_sweep(rng))
    for (IndexPair m : index_box(2))
      for (IndexPair n : index_box(2)) {
        if (m.is_zero() || n.is_zero()) continue;
        EXPECT_TRUE(replay_p1p2const(m, n, p).all_zero()) << p.str() << m << n;
      }
}

TEST(ReplayP1P2Const, PerturbedWitnessFails) {
  const ParamSet p(Rational(1), Rational(1), Rational(1), Rational(0));
  const WitnessFamily bad_a = [&p](IndexPair k) {
    ClassificationWitness w = canonical_witness(k, p);
    w.a_m = Rational(2);
    return w;
  };
  const WitnessFamily bad_b = [&p](IndexPair k) {
    ClassificationWitness w = canonical_witness(k, p);
    w.b_m = Rational(1);
    return w;
  };
  bool a_caught = false;
  bool b_caught = false;
  for (IndexPair m : index_box(2))
    for (IndexPair n : index_box(2)) {
      if (m.is_zero() || n.is_zero()) continue;
      a_caught = a_caught || !replay_p1p2const(m, n, p, bad_a).all_zero();
      b_caught = b_caught || !replay_p1p2const(m, n, p, bad_b).all_zero();
    }
  EXPECT_TRUE(a_caught);
  EXPECT_TRUE(b_caught);
}

}  // namespace
}  // namespace blockmod
