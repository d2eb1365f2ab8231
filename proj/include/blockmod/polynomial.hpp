#ifndef BLOCKMOD_POLYNOMIAL_HPP
#define BLOCKMOD_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blockmod/index_pair.hpp"
#include "blockmod/rational.hpp"

namespace blockmod {

/// Exponent vector of a monomial in N variables.
template <std::size_t N>
using Exponents = std::array<unsigned, N>;

template <std::size_t N>
constexpr unsigned total_degree(const Exponents<N>& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

/// Graded lexicographic order, variable 0 largest. Used as a "greater"
/// comparator so that maps iterate from the leading monomial downwards.
template <std::size_t N>
struct GradedLexGreater {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in N commuting variables over Q. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
template <std::size_t N>
class Polynomial {
 public:
  using Monomial = Exponents<N>;
  using TermMap = std::map<Monomial, Rational, GradedLexGreater<N>>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT(implicit)
  Polynomial(int c) : Polynomial(Rational(c)) {}               // NOLINT(implicit)

  static Polynomial variable(std::size_t i) {
    Monomial e{};
    e[i] = 1;
    return monomial(e, Rational(1));
  }

  static Polynomial monomial(const Monomial& e, const Rational& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(blockmod::total_degree(terms_.begin()->first));
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  /// Leading (graded-lex largest) term. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.begin(); }

  Rational coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const Monomial& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  /// this += c * o, without materialising c * o.
  Polynomial& add_scaled(const Polynomial& o, const Rational& c) {
    if (c.is_zero()) return *this;
    for (const auto& [e, v] : o.terms_) add_term(e, c * v);
    return *this;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
    return out;
  }

  Polynomial operator-() const { return scaled(Rational(-1)); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Monomial e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Rational evaluate(std::span<const Rational, N> point) const {
    // Power tables per variable keep this O(#terms * N).
    std::array<std::vector<Rational>, N> powers;
    for (std::size_t i = 0; i < N; ++i) {
      powers[i].push_back(Rational(1));
      const int d = degree_in(i);
      for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    Rational acc;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < N; ++i) t *= powers[i][e[i]];
      acc += t;
    }
    return acc;
  }

 private:
  TermMap terms_;
};

using Poly1 = Polynomial<1>;
using Poly2 = Polynomial<2>;
using Monomial2 = Exponents<2>;

/// Number of monomials of total degree <= d in two variables.
constexpr long monomial_count2(long d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

/// Substitutes `images[i]` for variable i: returns f(images[0], ..., images[N-1]).
template <std::size_t N, std::size_t M>
Polynomial<M> compose(const Polynomial<N>& f, const std::array<Polynomial<M>, N>& images) {
  std::array<std::vector<Polynomial<M>>, N> powers;
  for (std::size_t i = 0; i < N; ++i) {
    powers[i].push_back(Polynomial<M>(1));
    const int d = f.degree_in(i);
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial<M> out;
  for (const auto& [e, c] : f.terms()) {
    Polynomial<M> t(c);
    for (std::size_t i = 0; i < N; ++i)
      if (e[i] != 0) t = t * powers[i][e[i]];
    out += t;
  }
  return out;
}

/// Translation f(x - s): every variable x_i is replaced by x_i - s_i.
template <std::size_t N>
Polynomial<N> shift(const Polynomial<N>& f, const std::array<Rational, N>& s) {
  std::array<Polynomial<N>, N> images;
  for (std::size_t i = 0; i < N; ++i) images[i] = Polynomial<N>::variable(i) - Polynomial<N>(s[i]);
  return compose(f, images);
}

/// f(d1 - m1, d2 - m2).
inline Poly2 shift(const Poly2& f, IndexPair m) {
  if (m.is_zero()) return f;
  return shift<2>(f, {Rational(m.m1), Rational(m.m2)});
}

inline Rational evaluate(const Poly2& f, const Rational& x1, const Rational& x2) {
  const std::array<Rational, 2> pt{x1, x2};
  return f.evaluate(std::span<const Rational, 2>(pt));
}

inline Rational evaluate(const Poly1& f, const Rational& x) {
  const std::array<Rational, 1> pt{x};
  return f.evaluate(std::span<const Rational, 1>(pt));
}

inline Poly2 d1() { return Poly2::variable(0); }
inline Poly2 d2() { return Poly2::variable(1); }

/// X_m = (d | m^perp) = m2 d1 - m1 d2.
inline Poly2 x_m(IndexPair m) {
  return Rational(m.m2) * d1() - Rational(m.m1) * d2();
}

// Polynomials in the coordinates (X, d1) attached to an index m with m1 != 0
// reuse Poly2 with variable 0 = X and variable 1 = d1.

/// Rewrites f(d1, d2) in the coordinates (X_m, d1): returns F with
/// F(X_m(d), d1) = f(d). Uses d2 = (m2 d1 - X) / m1.
inline Poly2 rewrite_in_xm(const Poly2& f, IndexPair m) {
  if (m.m1 == 0) throw MathError("degenerate change of variables (m1 = 0)");
  const Poly2 x = Poly2::variable(0);
  const Poly2 dd = Poly2::variable(1);
  const Rational inv = Rational(m.m1).inverse();
  return compose<2, 2>(f, {dd, (Rational(m.m2) * dd - x).scaled(inv)});
}

/// Inverse of rewrite_in_xm: substitutes X = m2 d1 - m1 d2 back.
inline Poly2 substitute_xm(const Poly2& F, IndexPair m) {
  return compose<2, 2>(F, {x_m(m), d1()});
}

// Printing

namespace detail {

template <std::size_t N>
std::string monomial_string(const Exponents<N>& e, const std::array<std::string, N>& names) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace detail

/// Deterministic text form in graded-lex order, e.g. "3/2*d1^2*d2 - d2 + 5".
template <std::size_t N>
std::string to_string(const Polynomial<N>& p, const std::array<std::string, N>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = detail::monomial_string(e, names);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

inline const std::array<std::string, 2>& d_names() {
  static const std::array<std::string, 2> names{"d1", "d2"};
  return names;
}
inline const std::array<std::string, 2>& xd_names() {
  static const std::array<std::string, 2> names{"X", "d1"};
  return names;
}
inline const std::array<std::string, 1>& t_names() {
  static const std::array<std::string, 1> names{"t"};
  return names;
}

inline std::string to_string(const Poly2& p) { return to_string(p, d_names()); }
inline std::string to_string(const Poly1& p) { return to_string(p, t_names()); }

}  // namespace blockmod

#endif  // BLOCKMOD_POLYNOMIAL_HPP
