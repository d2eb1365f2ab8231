#include "blockmod/algebra.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "blockmod/random.hpp"

namespace blockmod {
namespace {

using E = AlgebraElement;

std::vector<E> generators(long radius) {
  std::vector<E> out;
  for (IndexPair m : index_box(radius)) out.push_back(E::basis(m));
  out.push_back(E::d2());
  return out;
}

TEST(Bracket, BasisExamples) {
  const AlgebraContext q2(Rational(2));
  // n1(m2+q) - m1(n2+q) = 0*2 - 1*(1+2) = -3.
  EXPECT_EQ(bracket_basis({1, 0}, {0, 1}, q2), E::basis({1, 1}, Rational(-3)));
  EXPECT_TRUE(bracket_basis({2, -1}, {2, -1}, q2).is_zero());
  const AlgebraContext q3(Rational(3));
  for (IndexPair m : index_box(3)) EXPECT_TRUE(bracket_basis(m, {0, -3}, q3).is_zero()) << m;
}

TEST(Bracket, DerivationAndL0) {
  const AlgebraContext q1(Rational(1));
  EXPECT_EQ(bracket(E::d2(), E::basis({3, 5}), q1), E::basis({3, 5}, Rational(5)));
  EXPECT_EQ(bracket(E::basis({3, 5}), E::d2(), q1), E::basis({3, 5}, Rational(-5)));
  EXPECT_TRUE(bracket(E::d2(), E::d2(), q1).is_zero());
  // ad L_0 = q d1.
  EXPECT_EQ(bracket(E::basis({0, 0}), E::basis({2, 7}), q1), E::basis({2, 7}, Rational(2)));
  const AlgebraContext q57(Rational(5, 7));
  EXPECT_EQ(bracket(E::d1(q57), E::basis({-3, 4}), q57), E::basis({-3, 4}, Rational(-3)));
  const E x = Rational(3, 2) * E::basis({1, 0}) - E::d2();
  EXPECT_TRUE(bracket(x, x, q57).is_zero());
}

TEST(Bracket, ZeroContextRejected) { EXPECT_THROW(AlgebraContext(Rational(0)), MathError); }

TEST(Jacobi, Examples) {
  const AlgebraContext q1(Rational(1));
  EXPECT_TRUE(jacobi_defect(E::d2(), E::basis({1, 0}), E::basis({0, 1}), q1).is_zero());
  const E x = E::basis({2, 1}) + E::d2();
  EXPECT_TRUE(jacobi_defect(x, x, E::basis({-1, 3}), q1).is_zero());
}

TEST(Jacobi, AllGeneratorTriplesSmallBox) {
  const AlgebraContext ctx(Rational(5, 7));
  const auto gens = generators(2);
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) ASSERT_TRUE(jacobi_defect(x, y, z, ctx).is_zero());
}

TEST(Jacobi, RandomCombinations) {
  SplitMix64 rng(3);
  auto random_element = [&] {
    E x;
    for (int k = 0; k < 3; ++k) {
      const long a = rng.uniform(-3, 3);
      const long b = rng.uniform(-3, 3);
      x.add_term(IndexPair{a, b}, random_rational(rng));
    }
    x.add_term(DegreeDerivation{}, random_rational(rng));
    return x;
  };
  for (int iter = 0; iter < 50; ++iter) {
    const AlgebraContext ctx(random_nonzero_rational(rng));
    const E x = random_element();
    const E y = random_element();
    const E z = random_element();
    EXPECT_TRUE(jacobi_defect(x, y, z, ctx).is_zero());
    EXPECT_EQ(bracket(x, y, ctx), -bracket(y, x, ctx));
  }
}

TEST(Centrality, IntegerQGivesCentralElement) {
  for (long q : {1L, 2L, -3L, 4L}) {
    const AlgebraContext ctx{Rational(q)};
    for (IndexPair m : index_box(3)) EXPECT_TRUE(bracket_basis(m, {0, -q}, ctx).is_zero());
  }
}

TEST(WittEmbedding, GeneratorsSatisfyWittRelations) {
  for (const Rational& q : {Rational(1), Rational(5, 7), Rational(-2), Rational(3, 2)}) {
    const AlgebraContext ctx(q);
    for (IndexPair m : {IndexPair{1, 0}, IndexPair{2, 3}, IndexPair{-1, 4}, IndexPair{3, -2}}) {
      for (long i = -4; i <= 4; ++i)
        for (long j = -4; j <= 4; ++j) {
          const E lhs = bracket(witt_generator(m, i, ctx), witt_generator(m, j, ctx), ctx);
          EXPECT_EQ(lhs, Rational(j - i) * witt_generator(m, i + j, ctx));
        }
    }
  }
  EXPECT_THROW(witt_generator({0, 2}, 1, AlgebraContext(Rational(1))), MathError);
}

TEST(ElementText, PrintAndParse) {
  const AlgebraContext q2(Rational(2));
  EXPECT_EQ(to_string(bracket_basis({1, 0}, {0, 1}, q2)), "-3*L(1,1)");
  const E x = parse_element("3/2*L(1,0) - D2", q2);
  EXPECT_EQ(x, Rational(3, 2) * E::basis({1, 0}) - E::d2());
  EXPECT_EQ(to_string(x), "3/2*L(1,0) - D2");
  EXPECT_EQ(parse_element("D1", q2), E::basis({0, 0}, Rational(1, 2)));
  EXPECT_EQ(parse_element("L(-2, 3)*4 + L(-2,3)", q2), E::basis({-2, 3}, Rational(5)));
  EXPECT_EQ(parse_element("2*(L(1,1) + D2)", q2), E::basis({1, 1}, Rational(2)) + E::d2(Rational(2)));
  EXPECT_THROW(parse_element("L(1,0)*L(0,1)", q2), ParseError);
  EXPECT_THROW(parse_element("3", q2), ParseError);
  EXPECT_THROW(parse_element("L(1)", q2), ParseError);
  EXPECT_THROW(parse_element("1 + D2", q2), ParseError);
  EXPECT_THROW(parse_element("M(1,1)", q2), ParseError);
}

TEST(ElementText, RoundTrip) {
  SplitMix64 rng(5);
  const AlgebraContext ctx(Rational(3));
  for (int iter = 0; iter < 100; ++iter) {
    E x;
    const int terms = static_cast<int>(rng.uniform(0, 4));
    for (int k = 0; k < terms; ++k) {
      const long a = rng.uniform(-5, 5);
      const long b = rng.uniform(-5, 5);
      x.add_term(IndexPair{a, b}, random_rational(rng));
    }
    if (rng.uniform(0, 1)) x.add_term(DegreeDerivation{}, random_rational(rng));
    EXPECT_EQ(parse_element(to_string(x), ctx), x) << to_string(x);
  }
}

}  // namespace
}  // namespace blockmod
