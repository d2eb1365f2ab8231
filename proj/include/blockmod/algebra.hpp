#ifndef BLOCKMOD_ALGEBRA_HPP
#define BLOCKMOD_ALGEBRA_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "blockmod/index_pair.hpp"
#include "blockmod/parse.hpp"
#include "blockmod/rational.hpp"

namespace blockmod {

/// The degree derivation d2 of B'(q), acting by d2(L_m) = m2 L_m.
struct DegreeDerivation {
  friend constexpr bool operator==(DegreeDerivation, DegreeDerivation) = default;
  friend constexpr auto operator<=>(DegreeDerivation, DegreeDerivation) = default;
};

/// Basis vector of B'(q): either L_m or the derivation d2. Ordered with all
/// L_m first (by index), then d2.
using Generator = std::variant<IndexPair, DegreeDerivation>;

inline std::string to_string(const Generator& g) {
  if (const auto* m = std::get_if<IndexPair>(&g)) {
    return "L(" + std::to_string(m->m1) + "," + std::to_string(m->m2) + ")";
  }
  return "D2";
}

/// Parameter q of B(q). Construction rejects q = 0.
class AlgebraContext {
 public:
  explicit AlgebraContext(Rational q) : q_(std::move(q)) {
    if (q_.is_zero()) throw MathError("B'(q) requires q != 0");
  }
  const Rational& q() const { return q_; }

 private:
  Rational q_;
};

/// Finite linear combination of generators of B'(q).
class AlgebraElement {
 public:
  using TermMap = std::map<Generator, Rational>;

  AlgebraElement() = default;

  static AlgebraElement basis(IndexPair m, const Rational& c = Rational(1)) {
    AlgebraElement x;
    x.add_term(m, c);
    return x;
  }
  static AlgebraElement d2(const Rational& c = Rational(1)) {
    AlgebraElement x;
    x.add_term(DegreeDerivation{}, c);
    return x;
  }
  /// d1 is not a generator: for q != 0 it equals (1/q) L_0 via ad L_0 = q d1.
  static AlgebraElement d1(const AlgebraContext& ctx) { return basis({0, 0}, ctx.q().inverse()); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const Generator& g, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }
  AlgebraElement scaled(const Rational& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [g, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), g, v * c);
    return out;
  }
  AlgebraElement operator-() const { return scaled(Rational(-1)); }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& x) { return x.scaled(c); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Structure constant of [L_m, L_n] = (n1(m2+q) - m1(n2+q)) L_{m+n}.
inline Rational structure_constant(IndexPair m, IndexPair n, const Rational& q) {
  return Rational(n.m1) * (Rational(m.m2) + q) - Rational(m.m1) * (Rational(n.m2) + q);
}

inline AlgebraElement bracket_basis(IndexPair m, IndexPair n, const AlgebraContext& ctx) {
  return AlgebraElement::basis(m + n, structure_constant(m, n, ctx.q()));
}

/// Bracket of B'(q): bilinear extension of the L_m relations together with
/// [d2, L_n] = n2 L_n and [d2, d2] = 0.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const AlgebraContext& ctx) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      const auto* mx = std::get_if<IndexPair>(&gx);
      const auto* my = std::get_if<IndexPair>(&gy);
      const Rational c = cx * cy;
      if (mx && my) {
        out.add_term(*mx + *my, c * structure_constant(*mx, *my, ctx.q()));
      } else if (!mx && my) {
        out.add_term(*my, c * Rational(my->m2));
      } else if (mx && !my) {
        out.add_term(*mx, -c * Rational(mx->m2));
      }
    }
  }
  return out;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
inline AlgebraElement jacobi_defect(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z,
                                    const AlgebraContext& ctx) {
  return bracket(x, bracket(y, z, ctx), ctx) + bracket(y, bracket(z, x, ctx), ctx) +
         bracket(z, bracket(x, y, ctx), ctx);
}

/// Witt generator d_{i m} = L_{i m} / (m1 q) of the Witt subalgebra along m.
inline AlgebraElement witt_generator(IndexPair m, long i, const AlgebraContext& ctx) {
  if (m.m1 == 0) throw MathError("Witt subalgebra needs m1 != 0");
  return AlgebraElement::basis(i * m, (Rational(m.m1) * ctx.q()).inverse());
}

/// "3/2*L(1,0) - D2" style text; generators in map order.
inline std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag != Rational(1)) out += mag.str() + "*";
    out += to_string(g);
  }
  return out;
}

namespace detail {

/// Parser value: either a pure scalar or a genuine algebra element.
struct ElementValue {
  AlgebraElement element;
  Rational scalar;
  bool is_scalar = true;

  friend ElementValue operator+(const ElementValue& a, const ElementValue& b) {
    if (a.is_scalar && b.is_scalar) return {{}, a.scalar + b.scalar, true};
    return {a.as_element() + b.as_element(), {}, false};
  }
  friend ElementValue operator-(const ElementValue& a, const ElementValue& b) { return a + (-b); }
  ElementValue operator-() const { return {-element, -scalar, is_scalar}; }

  AlgebraElement as_element() const {
    // Constants are not elements of B'(q); only 0 is tolerated.
    if (is_scalar) {
      if (!scalar.is_zero()) throw MathError("bare scalar in algebra expression");
      return {};
    }
    return element;
  }
};

struct ElementTraits {
  using Value = ElementValue;
  static inline thread_local const AlgebraContext* context = nullptr;

  static Value constant(const Rational& c) { return {{}, c, true}; }
  static Value multiply(const Value& a, const Value& b, Cursor& cur) {
    if (a.is_scalar) return b.is_scalar ? Value{{}, a.scalar * b.scalar, true} : Value{b.element.scaled(a.scalar), {}, false};
    if (b.is_scalar) return {a.element.scaled(b.scalar), {}, false};
    cur.fail("product of two algebra elements (use a bracket)");
  }
  static Value power(const Value& base, unsigned e, Cursor& cur) {
    if (!base.is_scalar) cur.fail("power of an algebra element");
    return {{}, base.scalar.pow(e), true};
  }
  static Value atom(const std::string& name, Cursor& cur) {
    if (name == "D2") return {AlgebraElement::d2(), {}, false};
    if (name == "D1") return {AlgebraElement::d1(*context), {}, false};
    if (name == "L") {
      cur.expect('(');
      const long a = cur.integer();
      cur.expect(',');
      const long b = cur.integer();
      cur.expect(')');
      return {AlgebraElement::basis({a, b}), {}, false};
    }
    cur.fail("unknown generator '" + name + "'");
  }
};

}  // namespace detail

/// Parses "L(m1,m2)", "D2", "D1" and rational-scaled sums of them. "D1" is
/// normalised to (1/q) L(0,0), hence the context.
inline AlgebraElement parse_element(std::string_view text, const AlgebraContext& ctx) {
  detail::ElementTraits::context = &ctx;
  detail::ElementValue v;
  try {
    v = ExpressionParser<detail::ElementTraits>::parse(text);
  } catch (const MathError& e) {
    throw ParseError(e.what(), 0);
  }
  if (v.is_scalar && !v.scalar.is_zero()) throw ParseError("expected an algebra element, got a scalar", 0);
  return v.is_scalar ? AlgebraElement{} : v.element;
}

}  // namespace blockmod

#endif  // BLOCKMOD_ALGEBRA_HPP
