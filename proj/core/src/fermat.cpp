#include "figurate/fermat.hpp"

#include <string>

#include "figurate/combinatorics.hpp"

namespace figurate {

RationalMatrix::RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw DomainError("matrix order must be positive");
}

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 1; i <= order; ++i) m(i, i) = 1;
  return m;
}

const Rational& RationalMatrix::operator()(std::size_t k, std::size_t j) const {
  if (k < 1 || j < 1 || k > order_ || j > order_) throw DomainError("matrix index out of range");
  return entries_[(k - 1) * order_ + (j - 1)];
}

Rational& RationalMatrix::operator()(std::size_t k, std::size_t j) {
  if (k < 1 || j < 1 || k > order_ || j > order_) throw DomainError("matrix index out of range");
  return entries_[(k - 1) * order_ + (j - 1)];
}

std::vector<Rational> RationalMatrix::row(std::size_t k) const {
  std::vector<Rational> out;
  out.reserve(order_);
  for (std::size_t j = 1; j <= order_; ++j) out.push_back((*this)(k, j));
  return out;
}

bool RationalMatrix::is_lower_triangular() const {
  for (std::size_t k = 1; k <= order_; ++k) {
    for (std::size_t j = k + 1; j <= order_; ++j) {
      if (!(*this)(k, j).is_zero()) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.order_ != b.order_) throw DomainError("matrix order mismatch");
  const std::size_t n = a.order_;
  RationalMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t r = 1; r <= n; ++r) {
      const Rational& lhs = a(i, r);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        const Rational& rhs = b(r, j);
        if (!rhs.is_zero()) out(i, j) += lhs * rhs;
      }
    }
  }
  return out;
}

RationalMatrix build_fermat(long p) {
  if (p < 1) throw DomainError("Fermat matrix order must be >= 1");
  const auto n = static_cast<std::size_t>(p);
  RationalMatrix a(n);
  for (long k = 1; k <= p; ++k) {
    const Integer kf = factorial(k);
    for (long j = 1; j <= k; ++j) {
      a(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) =
          Rational(stirling1_unsigned(k, j), kf);
    }
  }
  return a;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  if (!m.is_lower_triangular()) throw DomainError("invert_exact expects a lower-triangular matrix");
  const std::size_t n = m.order();
  for (std::size_t k = 1; k <= n; ++k) {
    if (m(k, k).is_zero()) {
      throw DomainError("singular matrix: zero diagonal entry at " + std::to_string(k));
    }
  }
  // Column j of the inverse solves m x = e_j; x is zero above row j.
  RationalMatrix inv(n);
  for (std::size_t j = 1; j <= n; ++j) {
    inv(j, j) = Rational(1) / m(j, j);
    for (std::size_t k = j + 1; k <= n; ++k) {
      Rational acc;
      for (std::size_t r = j; r < k; ++r) acc += m(k, r) * inv(r, j);
      inv(k, j) = -acc / m(k, k);
    }
  }
  return inv;
}

RationalMatrix inverse_closed(long p) {
  if (p < 1) throw DomainError("matrix order must be >= 1");
  const auto n = static_cast<std::size_t>(p);
  RationalMatrix inv(n);
  for (long k = 1; k <= p; ++k) {
    for (long j = 1; j <= k; ++j) {
      Integer v = factorial(j) * stirling2(k, j);
      if ((k - j) % 2 != 0) v = -v;
      inv(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = Rational(v);
    }
  }
  return inv;
}

bool certify_inverse(long p) {
  const RationalMatrix a = build_fermat(p);
  const RationalMatrix closed = inverse_closed(p);
  const RationalMatrix id = RationalMatrix::identity(static_cast<std::size_t>(p));
  return a * closed == id && closed * a == id && invert_exact(a) == closed;
}

Rational triangular_determinant(const RationalMatrix& m) {
  Rational det = 1;
  for (std::size_t k = 1; k <= m.order(); ++k) det *= m(k, k);
  return det;
}

Polynomial figurate_polynomial(long k) {
  if (k < 1) throw DomainError("figurate dimension must be >= 1");
  const Integer kf = factorial(k);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k + 1));
  for (long r = 1; r <= k; ++r) coeffs[static_cast<std::size_t>(r)] = Rational(stirling1_unsigned(k, r), kf);
  return Polynomial(std::move(coeffs));
}

}  // namespace figurate
