#ifndef BLOCKMOD_IDENTITIES_HPP
#define BLOCKMOD_IDENTITIES_HPP

#include <functional>
#include <string>

#include "blockmod/omega.hpp"
#include "blockmod/polynomial.hpp"

namespace blockmod {

// Polynomials F(X, Y) below reuse Poly2 with variable 0 = X, variable 1 = Y.

/// Coefficient of var^k in f, as a polynomial in the remaining variable.
inline Poly1 coefficient_in(const Poly2& f, std::size_t var, unsigned k) {
  Poly1 out;
  const std::size_t other = 1 - var;
  for (const auto& [e, c] : f.terms())
    if (e[var] == k) out.add_term({e[other]}, c);
  return out;
}

/// Embeds a polynomial in X as variable 0 of a Poly2.
inline Poly2 embed_x(const Poly1& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], 0}, c);
  return out;
}

/// F(X, Y) = (f(X) + (2aX + bc) Y + b Y^2) / 2c, the general solution of
/// F(X, Y) - F(X, Y - c) = aX + bY.
inline Poly2 lemma_poly_build(const Poly1& fX, const Rational& a, const Rational& b, const Rational& c) {
  if (c.is_zero()) throw MathError("difference step c must be nonzero");
  const Poly2 X = Poly2::variable(0);
  const Poly2 Y = Poly2::variable(1);
  Poly2 num = embed_x(fX);
  num += (Rational(2) * a * X + Poly2(b * c)) * Y;
  num += b * (Y * Y);
  return num.scaled((Rational(2) * c).inverse());
}

/// True iff F(X, Y) - F(X, Y - c) = aX + bY and F has the shape forced by
/// that identity (Y-degree <= 2, Y^2 coefficient b/2c, Y coefficient aX/c + b/2).
inline bool lemma_poly_check(const Poly2& F, const Rational& a, const Rational& b, const Rational& c) {
  if (c.is_zero()) throw MathError("difference step c must be nonzero");
  const Poly2 X = Poly2::variable(0);
  const Poly2 Y = Poly2::variable(1);
  const Poly2 diff = F - shift<2>(F, {Rational(), c});
  if (!(diff == a * X + b * Y)) return false;
  if (F.degree_in(1) > 2) return false;
  const Rational two_c = Rational(2) * c;
  if (!(coefficient_in(F, 1, 2) == Poly1(b / two_c))) return false;
  const Poly1 x = Poly1::variable(0);
  return coefficient_in(F, 1, 1) == (a / c) * x + Poly1(b / Rational(2));
}

/// g_n(d - m) g_m(d) - g_m(d - n) g_n(d) - (n1(m2+q) - m1(n2+q)) g_{m+n}(d),
/// i.e. the module relation [L_m, L_n] . 1 evaluated through g. Zero for a
/// module.
inline Poly2 replay_gg(IndexPair m, IndexPair n, const ParamSet& p, ActionRule rule = ActionRule::canonical) {
  const Poly2 gm = action_on_one(m, p, rule);
  const Poly2 gn = action_on_one(n, p, rule);
  const Poly2 gmn = action_on_one(m + n, p, rule);
  return shift(gn, m) * gm - shift(gm, n) * gn - structure_constant(m, n, p.q()) * gmn;
}

/// G_m(d) = g_m(d + m) g_{-m}(d).
inline Poly2 product_g(IndexPair m, const ParamSet& p) {
  return shift(action_on_one(m, p), -m) * action_on_one(-m, p);
}

/// G_m(d) - G_m(d - m) - 2 m1 q^2 d1.
inline Poly2 replay_G(IndexPair m, const ParamSet& p) {
  const Poly2 G = product_g(m, p);
  return G - shift(G, m) - (Rational(2 * m.m1) * p.q() * p.q()) * d1();
}

struct FhReplay {
  Poly1 h;              // F_m - q^2 d1 (d1 + m1), as a polynomial in X
  bool defect = false;  // remainder still depends on d1
  Poly2 remainder;      // the full remainder in (X, d1) coordinates
  Poly1 expected_h;     // -(X - q m1 (alpha - 1)) (X - q m1 alpha)
  bool matches_expected = false;
};

/// Rewrites G_m in (X_m, d1), strips q^2 d1 (d1 + m1) and checks that what
/// remains is a polynomial h_m(X_m) equal to -(X - q m1(alpha-1))(X - q m1 alpha).
inline FhReplay replay_Fh(IndexPair m, const ParamSet& p) {
  if (m.m1 == 0) throw MathError("replay_Fh needs m1 != 0");
  const Poly2 F = rewrite_in_xm(product_g(m, p), m);
  const Poly2 dd = Poly2::variable(1);
  const Rational q2 = p.q() * p.q();
  FhReplay out;
  out.remainder = F - q2 * (dd * (dd + Poly2(Rational(m.m1))));
  out.defect = out.remainder.degree_in(1) > 0;
  out.h = coefficient_in(out.remainder, 1, 0);
  const Poly1 X = Poly1::variable(0);
  const Rational qm1 = p.q() * Rational(m.m1);
  out.expected_h = -((X - Poly1(qm1 * (p.alpha() - Rational(1)))) * (X - Poly1(qm1 * p.alpha())));
  out.matches_expected = !out.defect && out.h == out.expected_h;
  return out;
}

/// Data (lambda_m, alpha_m, a_m, b_m) with g_m = lambda_m (q(d1 - m1 alpha_m) + a_m X_m + b_m).
struct ClassificationWitness {
  IndexPair m;
  Rational lambda_m;
  Rational alpha_m;
  Rational a_m;
  Rational b_m;
};

/// lambda_m = lambda1^m1 lambda2^m2, alpha_m = alpha, a_m = 1, b_m = 0.
inline ClassificationWitness canonical_witness(IndexPair m, const ParamSet& p) {
  return {m, p.lambda_power(m), p.alpha(), Rational(1), Rational(0)};
}

using WitnessFamily = std::function<ClassificationWitness(IndexPair)>;

struct CoefficientDefects {
  Rational d1_coefficient;  // constraint from the d1 coefficient
  Rational d2_coefficient;  // constraint from the d2 coefficient
  Rational constant;        // constraint from the constant term

  bool all_zero() const { return d1_coefficient.is_zero() && d2_coefficient.is_zero() && constant.is_zero(); }
};

/// LHS - RHS of the three scalar constraints obtained by comparing the d1, d2
/// and constant coefficients of the bracket relation for g_m = lambda_m(q(d1 - m1 alpha_m) + a_m X_m + b_m).
/// Preconditions m != 0, n != 0.
inline CoefficientDefects replay_p1p2const(IndexPair m, IndexPair n, const ParamSet& p, const WitnessFamily& family) {
  if (m.is_zero() || n.is_zero()) throw MathError("replay_p1p2const needs m, n != 0");
  const ClassificationWitness wm = family(m);
  const ClassificationWitness wn = family(n);
  const ClassificationWitness ws = family(m + n);
  const Rational& q = p.q();
  const Rational ratio = wm.lambda_m.inverse() * wn.lambda_m.inverse() * ws.lambda_m;
  const Rational c = ratio * structure_constant(m, n, q);
  const Rational n_mperp(pairing(n, m.perp()));
  const Rational m_nperp(pairing(m, n.perp()));
  const Rational m1(m.m1), m2(m.m2), n1(n.m1), n2(n.m2);

  const Rational left_n = q * n1 + wm.a_m * n_mperp;
  const Rational left_m = q * m1 + wn.a_m * m_nperp;

  CoefficientDefects out;
  out.d1_coefficient = (q + wn.a_m * n2) * left_n - (q + wm.a_m * m2) * left_m - c * (q + ws.a_m * (m2 + n2));
  out.d2_coefficient = wn.a_m * n1 * left_n - wm.a_m * m1 * left_m - c * (m1 + n1) * ws.a_m;
  out.constant = left_n * (q * n1 * wn.alpha_m - wn.b_m) - left_m * (q * m1 * wm.alpha_m - wm.b_m) -
                 c * (q * (m1 + n1) * ws.alpha_m - ws.b_m);
  return out;
}

inline CoefficientDefects replay_p1p2const(IndexPair m, IndexPair n, const ParamSet& p) {
  return replay_p1p2const(m, n, p, [&p](IndexPair k) { return canonical_witness(k, p); });
}

}  // namespace blockmod

#endif  // BLOCKMOD_IDENTITIES_HPP
