#pragma once

// Exact arithmetic: arbitrary-precision integers, normalized rationals and
// dense univariate polynomials over the rationals. Nothing in this header
// ever rounds.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace figurate {

using Integer = mpz_class;

/// Thrown when an operation is invoked outside its mathematical domain
/// (negative factorial, zero denominator, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when two computations that must agree do not. Seeing one of these
/// means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Integer power(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& value);

/// Parses a decimal integer with optional leading '-'.
Integer parse_integer(std::string_view text);

/// Fraction kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT
  Rational(long value) : num_(value), den_(1) {}             // NOLINT
  Rational(int value) : num_(value), den_(1) {}              // NOLINT

  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Integer num_;
  Integer den_;
};

/// Canonical fraction num/den. Throws DomainError on a zero denominator.
Rational rational_normalize(const Integer& num, const Integer& den);

/// "num/den", always with both parts ("0/1", "3/1", "-1/2").
std::string to_string(const Rational& value);

/// Like to_string but drops a unit denominator ("3", "-1/2").
std::string to_display_string(const Rational& value);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Exact univariate polynomial in n. Coefficient i multiplies n^i; the
/// coefficient list never carries trailing zeros, so the zero polynomial
/// has an empty list and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// n + shift
  static Polynomial linear(const Integer& shift);

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of n^power; zero past the degree.
  Rational coefficient(std::size_t power) const;

  Rational evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  /// p(n) -> p(n + shift).
  Polynomial shifted(const Integer& shift) const;
  Polynomial power(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul, scale };

/// Dispatching form of the polynomial operations. For `scale`, `b` must be a
/// constant polynomial (degree <= 0); its value is the factor.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

Rational poly_eval(const Polynomial& poly, const Integer& x);

bool poly_equal(const Polynomial& a, const Polynomial& b);

/// Unique polynomial of degree < xs.size() through the given points
/// (Newton divided differences). Abscissae must be distinct.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Human-readable form, highest power first: "1/2 n^2 + 1/2 n".
std::string to_display_string(const Polynomial& poly);

/// JSON array of "num/den" strings, index = exponent.
std::string to_json(const Polynomial& poly);
Polynomial polynomial_from_json(std::string_view json);

}  // namespace figurate
