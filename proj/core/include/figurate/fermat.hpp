#pragma once

// Fermat matrices: the lower-triangular change of basis from {n, ..., n^p}
// to the figurate numbers {F(n,1), ..., F(n,p)}, and its exact inverse.
// Indices at this surface are 1-based, (row k, column j).

#include <cstddef>
#include <vector>

#include "figurate/exact.hpp"

namespace figurate {

class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t order);

  static RationalMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }

  /// 1-based access.
  const Rational& operator()(std::size_t k, std::size_t j) const;
  Rational& operator()(std::size_t k, std::size_t j);

  /// Row k (1-based) as a contiguous copy.
  std::vector<Rational> row(std::size_t k) const;

  bool is_lower_triangular() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;  // row-major, 0-based internally
};

/// A_p with a(k, j) = s(k, j) / k!.
RationalMatrix build_fermat(long p);

/// Inverse of a lower-triangular matrix by forward substitution. Throws
/// DomainError for a zero diagonal entry or a non-triangular input.
RationalMatrix invert_exact(const RationalMatrix& m);

/// Closed-form inverse a'(k, j) = (-1)^(k-j) j! S(k, j).
RationalMatrix inverse_closed(long p);

/// A_p * inverse_closed == I, inverse_closed * A_p == I and
/// invert_exact(A_p) == inverse_closed, all exactly.
bool certify_inverse(long p);

/// Product of the diagonal; the determinant of a triangular matrix.
Rational triangular_determinant(const RationalMatrix& m);

/// F(n, k) = (1/k!) sum_r s(k, r) n^r, degree k, zero constant term.
Polynomial figurate_polynomial(long k);

}  // namespace figurate
