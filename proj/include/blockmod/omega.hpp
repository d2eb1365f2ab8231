#ifndef BLOCKMOD_OMEGA_HPP
#define BLOCKMOD_OMEGA_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockmod/algebra.hpp"
#include "blockmod/polynomial.hpp"

namespace blockmod {

/// Parameters (q, lambda1, lambda2, alpha) of the module Omega(lambda, alpha)
/// over B(q). q, lambda1 and lambda2 must be nonzero.
class ParamSet {
 public:
  ParamSet(Rational q, Rational lambda1, Rational lambda2, Rational alpha)
      : q_(std::move(q)), lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)), alpha_(std::move(alpha)) {
    if (q_.is_zero()) throw MathError("q must be nonzero");
    if (lambda1_.is_zero() || lambda2_.is_zero()) throw MathError("lambda1 and lambda2 must be nonzero");
  }

  const Rational& q() const { return q_; }
  const Rational& lambda1() const { return lambda1_; }
  const Rational& lambda2() const { return lambda2_; }
  const Rational& alpha() const { return alpha_; }

  AlgebraContext context() const { return AlgebraContext(q_); }

  /// lambda^m = lambda1^m1 lambda2^m2.
  Rational lambda_power(IndexPair m) const { return lambda1_.pow(m.m1) * lambda2_.pow(m.m2); }

  /// The point (0, -q alpha) whose vanishing ideal is Omega'.
  std::pair<Rational, Rational> special_point() const { return {Rational(), -(q_ * alpha_)}; }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

  std::string str() const {
    return "q=" + q_.str() + " lambda=(" + lambda1_.str() + "," + lambda2_.str() + ") alpha=" + alpha_.str();
  }

 private:
  Rational q_;
  Rational lambda1_;
  Rational lambda2_;
  Rational alpha_;
};

/// Parameters of the Witt module Omega(lambda, alpha) on C[t].
struct WittParams {
  Rational lambda;
  Rational alpha;

  WittParams(Rational l, Rational a) : lambda(std::move(l)), alpha(std::move(a)) {
    if (lambda.is_zero()) throw MathError("Witt module needs lambda != 0");
  }
  friend bool operator==(const WittParams&, const WittParams&) = default;
};

/// Which closed form is used for L_m . 1.
enum class ActionRule {
  /// lambda^m ((m2 + q) d1 - m1 (d2 + q alpha)); the one satisfying the module axioms.
  canonical,
  /// lambda^m ((q alpha + m2) d1 - m1 (alpha + d2)); q and q*alpha transposed.
  /// Kept as a negative control: it is a B(q alpha)-module formula, not a B(q) one.
  transposed,
};

inline const char* to_string(ActionRule r) {
  return r == ActionRule::canonical ? "canonical" : "transposed";
}

/// g_m = L_m . 1.
inline Poly2 action_on_one(IndexPair m, const ParamSet& p, ActionRule rule = ActionRule::canonical) {
  const Rational lam = p.lambda_power(m);
  const Rational m1(m.m1);
  const Rational m2(m.m2);
  Poly2 g;
  if (rule == ActionRule::canonical) {
    g = (m2 + p.q()) * d1() - m1 * (d2() + Poly2(p.q() * p.alpha()));
  } else {
    g = (p.q() * p.alpha() + m2) * d1() - m1 * (d2() + Poly2(p.alpha()));
  }
  return lam * g;
}

/// L_m . f = f(d - m) g_m.
inline Poly2 act_basis(IndexPair m, const Poly2& f, const ParamSet& p, ActionRule rule = ActionRule::canonical) {
  if (f.is_zero()) return {};
  return shift(f, m) * action_on_one(m, p, rule);
}

/// Action of B'(q) on Omega: linear in x, d2 acts by multiplication.
inline Poly2 act(const AlgebraElement& x, const Poly2& f, const ParamSet& p, ActionRule rule = ActionRule::canonical) {
  Poly2 out;
  for (const auto& [g, c] : x.terms()) {
    if (const auto* m = std::get_if<IndexPair>(&g)) {
      out.add_scaled(act_basis(*m, f, p, rule), c);
    } else {
      out.add_scaled(d2() * f, c);
    }
  }
  return out;
}

/// act([x,y], f) - act(x, act(y, f)) + act(y, act(x, f)); zero for a module.
inline Poly2 module_axiom_defect(const AlgebraElement& x, const AlgebraElement& y, const Poly2& f, const ParamSet& p,
                                 ActionRule rule = ActionRule::canonical) {
  const AlgebraContext ctx = p.context();
  return act(bracket(x, y, ctx), f, p, rule) - act(x, act(y, f, p, rule), p, rule) + act(y, act(x, f, p, rule), p, rule);
}

/// f lies in Omega' = d1 Omega + (q alpha + d2) Omega iff f(0, -q alpha) = 0.
inline bool omega_prime_membership(const Poly2& f, const ParamSet& p) {
  const auto [x, y] = p.special_point();
  return evaluate(f, x, y).is_zero();
}

// Witt modules

/// d_i . f(t) = lambda^i (t - i alpha) f(t - i).
inline Poly1 witt_act(long i, const Poly1& f, const WittParams& w) {
  const Poly1 t = Poly1::variable(0);
  const Poly1 factor = t - Poly1(Rational(i) * w.alpha);
  return w.lambda.pow(i) * (factor * shift<1>(f, {Rational(i)}));
}

/// Reduction of a polynomial in d1, d2 modulo X_m M (m1 != 0): substitutes
/// d2 = (m2/m1) d1. The result is a polynomial in the single variable d1.
inline Poly1 reduce_mod_xm(const Poly2& f, IndexPair m) {
  if (m.m1 == 0) throw MathError("reduction modulo X_m needs m1 != 0");
  const Poly1 s = Poly1::variable(0);
  return compose<2, 1>(f, {s, (Rational(m.m2) / Rational(m.m1)) * s});
}

struct WittMismatch {
  long i;
  Poly1 reduced;
  Poly1 expected;
};

struct WittRestriction {
  WittParams params;
  std::vector<WittMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Restriction of Omega(lambda, alpha) to the Witt subalgebra along m:
/// (lambda_m, alpha_m) = (lambda^m, alpha). Checks for each i in
/// [i_lo, i_hi] that g_{im} mod X_m equals q lambda_m^i (d1 - i m1 alpha_m).
inline WittRestriction witt_restrict(IndexPair m, long i_lo, long i_hi, const ParamSet& p,
                                     ActionRule rule = ActionRule::canonical) {
  if (m.m1 == 0) throw MathError("Witt restriction needs m1 != 0");
  WittRestriction out{WittParams(p.lambda_power(m), p.alpha()), {}};
  const Poly1 s = Poly1::variable(0);
  for (long i = i_lo; i <= i_hi; ++i) {
    Poly1 reduced = reduce_mod_xm(action_on_one(i * m, p, rule), m);
    const Rational coeff = p.q() * out.params.lambda.pow(i);
    Poly1 expected = coeff * (s - Poly1(Rational(i * m.m1) * out.params.alpha));
    if (!(reduced == expected)) out.mismatches.push_back({i, std::move(reduced), std::move(expected)});
  }
  return out;
}

// Isomorphism rigidity

struct IsoResult {
  bool isomorphic = false;
  std::optional<IndexPair> witness;
};

/// Witness search order: increasing |m1| + |m2|, then m1 descending, then m2
/// descending. The first indices tried are (0,0), (1,0), (0,1), (0,-1), (-1,0).
inline std::vector<IndexPair> witness_order(long radius) {
  std::vector<IndexPair> box = index_box(radius);
  std::stable_sort(box.begin(), box.end(), [](IndexPair a, IndexPair b) {
    const long na = std::labs(a.m1) + std::labs(a.m2);
    const long nb = std::labs(b.m1) + std::labs(b.m2);
    if (na != nb) return na < nb;
    if (a.m1 != b.m1) return a.m1 > b.m1;
    return a.m2 > b.m2;
  });
  return box;
}

/// Decides Omega(p) ~ Omega(p'). Any isomorphism is a U(h)-map, so it sends
/// f to c f with c = phi(1) a nonzero constant; comparing L_m . 1 on both sides
/// the constant cancels, so the modules are isomorphic iff every g_m agrees.
/// When they are not, the first index (in witness_order) with g_m != g'_m is
/// returned.
inline IsoResult iso_check(const ParamSet& p, const ParamSet& p2, long radius) {
  if (!(p.q() == p2.q())) throw MathError("iso_check needs both parameter sets over the same q");
  if (p == p2) return {true, std::nullopt};
  for (IndexPair m : witness_order(radius)) {
    if (!(action_on_one(m, p) == action_on_one(m, p2))) return {false, m};
  }
  // Radius 1 always separates distinct parameters; only radius 0 gets here.
  return {false, std::nullopt};
}

}  // namespace blockmod

#endif  // BLOCKMOD_OMEGA_HPP
