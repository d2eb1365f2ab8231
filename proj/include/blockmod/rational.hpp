#ifndef BLOCKMOD_RATIONAL_HPP
#define BLOCKMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blockmod {

/// Raised when an operation is asked for something outside its domain
/// (inverting zero, a degenerate change of variables, q = 0, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by every text parser in the library. `position` is the 0-based
/// character offset at which parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so two values are equal iff their representations are.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}                 // NOLINT(implicit)
  Rational(long v) : value_(v) {}                // NOLINT(implicit)
  Rational(long long v) : value_(mpz_class(std::to_string(v))) {}  // NOLINT(implicit)

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "a" or "a/b" (optional leading sign, surrounding whitespace
  /// ignored). A zero denominator is a MathError, malformed text a ParseError.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  Rational inverse() const {
    if (is_zero()) throw MathError("zero has no inverse");
    return Rational(mpq_class(1) / value_);
  }

  /// Integer power; negative exponents invert first.
  Rational pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(num, den));
  }

  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rational pow(const Rational& a, long k) { return a.pow(k); }

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && detail::is_space(text[i])) ++i;
  };
  auto digits = [&](std::string& out) {
    const std::size_t start = i;
    while (i < text.size() && detail::is_digit(text[i])) out.push_back(text[i++]);
    if (i == start) throw ParseError("expected digits", i);
  };

  skip();
  if (i == text.size()) throw ParseError("empty rational", i);
  std::string num;
  if (text[i] == '-' || text[i] == '+') {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  digits(num);
  std::string den = "1";
  skip();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip();
    den.clear();
    digits(den);
    skip();
  }
  if (i != text.size()) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
  return Rational(mpz_class(num), mpz_class(den));
}

}  // namespace blockmod

#endif  // BLOCKMOD_RATIONAL_HPP
