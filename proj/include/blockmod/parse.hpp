#ifndef BLOCKMOD_PARSE_HPP
#define BLOCKMOD_PARSE_HPP

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "blockmod/polynomial.hpp"
#include "blockmod/rational.hpp"

namespace blockmod {

/// Character cursor shared by the expression parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && detail::is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  /// Unsigned decimal literal.
  mpz_class natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && detail::is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  /// Optionally signed integer that fits in a long.
  long integer() {
    bool neg = accept('-');
    if (!neg) accept('+');
    const mpz_class v = natural();
    if (!v.fits_slong_p()) fail("integer out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void rewind(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Recursive-descent parser for "+ - * ^ ( )" expressions over rationals.
/// `Traits` supplies the value type and the meaning of identifiers:
///
///   using Value;
///   static Value constant(const Rational&);
///   static Value multiply(const Value&, const Value&, Cursor&);
///   static Value power(const Value&, unsigned, Cursor&);
///   static Value atom(const std::string& name, Cursor&);
///
/// Value must support +, - and unary -.
template <typename Traits>
class ExpressionParser {
 public:
  using Value = typename Traits::Value;

  static Value parse(std::string_view text) {
    Cursor cur(text);
    if (cur.at_end()) cur.fail("empty expression");
    Value v = sum(cur);
    if (!cur.at_end()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
    return v;
  }

 private:
  static Value sum(Cursor& cur) {
    Value acc = product(cur);
    for (;;) {
      if (cur.accept('+')) {
        acc = acc + product(cur);
      } else if (cur.accept('-')) {
        acc = acc - product(cur);
      } else {
        return acc;
      }
    }
  }

  static Value product(Cursor& cur) {
    Value acc = unary(cur);
    while (cur.accept('*')) acc = Traits::multiply(acc, unary(cur), cur);
    return acc;
  }

  static Value unary(Cursor& cur) {
    if (cur.accept('-')) return -unary(cur);
    if (cur.accept('+')) return unary(cur);
    return power(cur);
  }

  static Value power(Cursor& cur) {
    Value base = primary(cur);
    if (!cur.accept('^')) return base;
    if (cur.peek() == '-') cur.fail("negative exponent");
    const mpz_class e = cur.natural();
    if (!e.fits_uint_p() || e > 1000) cur.fail("exponent too large");
    return Traits::power(base, static_cast<unsigned>(e.get_ui()), cur);
  }

  static Value primary(Cursor& cur) {
    const char c = cur.peek();
    if (c == '(') {
      cur.expect('(');
      Value v = sum(cur);
      cur.expect(')');
      return v;
    }
    if (detail::is_digit(c)) {
      const mpz_class num = cur.natural();
      mpz_class den = 1;
      if (cur.accept('/')) {
        den = cur.natural();
        if (den == 0) cur.fail("zero denominator");
      }
      return Traits::constant(Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return Traits::atom(cur.identifier(), cur);
    }
    if (c == '\0') cur.fail("unexpected end of expression");
    cur.fail(std::string("unexpected '") + c + "'");
  }
};

namespace detail {

template <std::size_t N, const std::array<std::string, N>& (*Names)()>
struct NamedPolynomialTraits {
  using Value = Polynomial<N>;

  static Value constant(const Rational& c) { return Value(c); }
  static Value multiply(const Value& a, const Value& b, Cursor&) { return a * b; }
  static Value power(const Value& base, unsigned e, Cursor&) {
    Value out(1);
    for (unsigned i = 0; i < e; ++i) out = out * base;
    return out;
  }
  static Value atom(const std::string& name, Cursor& cur) {
    const auto& names = Names();
    for (std::size_t i = 0; i < N; ++i)
      if (names[i] == name) return Value::variable(i);
    cur.fail("unknown variable '" + name + "'");
  }
};

}  // namespace detail

/// Parses a polynomial in d1, d2.
inline Poly2 parse_poly2(std::string_view text) {
  return ExpressionParser<detail::NamedPolynomialTraits<2, &d_names>>::parse(text);
}

/// Parses a polynomial in t.
inline Poly1 parse_poly1(std::string_view text) {
  return ExpressionParser<detail::NamedPolynomialTraits<1, &t_names>>::parse(text);
}

/// Parses a polynomial in the coordinates (X, d1).
inline Poly2 parse_poly_xd(std::string_view text) {
  return ExpressionParser<detail::NamedPolynomialTraits<2, &xd_names>>::parse(text);
}

}  // namespace blockmod

#endif  // BLOCKMOD_PARSE_HPP
