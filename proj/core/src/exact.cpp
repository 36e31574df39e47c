#include "figurate/exact.hpp"

#include <algorithm>
#include <utility>

#include <nlohmann/json.hpp>

namespace figurate {

Integer power(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("invalid fraction: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational rational_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ += rhs.num_;
    return *this;
  }
  *this = Rational(Integer(num_ * rhs.den_ + rhs.num_ * den_), Integer(den_ * rhs.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ *= rhs.num_;
    return *this;
  }
  *this = Rational(Integer(num_ * rhs.num_), Integer(den_ * rhs.den_));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero rational");
  *this = Rational(Integer(num_ * rhs.den_), Integer(den_ * rhs.num_));
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Rational& value) {
  return to_string(value.numerator()) + "/" + to_string(value.denominator());
}

std::string to_display_string(const Rational& value) {
  if (value.is_integer()) return to_string(value.numerator());
  return to_string(value);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << to_display_string(value);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const Integer& shift) { return Polynomial({Rational(shift), 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational Polynomial::evaluate(const Integer& x) const { return evaluate(Rational(x)); }

Polynomial Polynomial::shifted(const Integer& shift) const {
  // Horner in the substituted variable (n + shift).
  const Polynomial var = linear(shift);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= var;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::power(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
    case PolyOp::scale:
      if (b.degree() > 0) throw DomainError("scale expects a constant factor");
      return a * b.coefficient(0);
  }
  throw DomainError("unknown polynomial operation");
}

Rational poly_eval(const Polynomial& poly, const Integer& x) { return poly.evaluate(x); }

bool poly_equal(const Polynomial& a, const Polynomial& b) { return a == b; }

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx.is_zero()) throw DomainError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  // Nested Newton form, innermost first.
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result *= Polynomial({-xs[i], 1});
    result += Polynomial::constant(dd[i]);
  }
  return result;
}

std::string to_display_string(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  const auto& c = poly.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    Rational mag = c[i].sign() < 0 ? -c[i] : c[i];
    if (out.empty()) {
      if (c[i].sign() < 0) out += "-";
    } else {
      out += c[i].sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += to_display_string(mag);
    if (i > 0) {
      if (!unit) out += " ";
      out += "n";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_json(const Polynomial& poly) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : poly.coefficients()) arr.push_back(to_string(c));
  return arr.dump();
}

Polynomial polynomial_from_json(std::string_view json) {
  const auto parsed = nlohmann::json::parse(json.begin(), json.end(), nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array()) {
    throw DomainError("polynomial JSON must be an array of rational strings");
  }
  std::vector<Rational> coeffs;
  for (const auto& item : parsed) {
    if (!item.is_string()) throw DomainError("polynomial coefficient must be a string");
    coeffs.push_back(parse_rational(item.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace figurate
