#pragma once

// Power sums S(n, p) = 1^p + 2^p + ... + n^p and the equivalent ways of
// writing them (and n^p itself) as integer combinations of figurate numbers
// F(m, k) = m (m+1) ... (m+k-1) / k!, evaluated at shifted arguments m = n + s.
//
// Every figurate-linear formula is stored as data (a term list) and goes
// through one evaluator and one symbolic expander.

#include <string_view>
#include <vector>

#include "figurate/exact.hpp"

namespace figurate {

/// Rising-factorial figurate number, defined for every integer n. Vanishes
/// for n in {0, -1, ..., -(k-1)}; equals C(n+k-1, k) for n >= 1.
Integer figurate(const Integer& n, long k);

enum class Formula {
  power_ml1,  // n^p = sum_l (-1)^l c(p,l) F(n, p-l), c from the k-tuple sum
  eq5,        // sum_i (-1)^(i-1) (p-i+1)! S(p, p-i+1) F(n, p-i+2)
  alt1,       // sum_j j! S(p,j) F(n-j+1, j+1)
  alt2,       // sum_j <p,j> F(n+j-p, p+1)
  alt3,       // sum_j (j-1)! S(p+1,j) F(n-j+1, j)
  faulhaber,  // prefactor * polynomial in the triangular number T(n)
  brute,      // direct accumulation
};

inline constexpr Formula kAllFormulas[] = {Formula::power_ml1, Formula::eq5,  Formula::alt1,
                                           Formula::alt2,      Formula::alt3, Formula::faulhaber,
                                           Formula::brute};

/// Command-line names: ml1-power, eq5, stir, euler, alt3, faulhaber, brute.
std::string_view to_string(Formula formula);
/// Accepts the command-line names and the tag names (power_ml1, alt1, alt2).
/// Throws std::invalid_argument otherwise.
Formula parse_formula(std::string_view name);

/// Whether the formula is a linear combination of figurate numbers.
bool is_figurate_linear(Formula formula);

struct FigurateTerm {
  Integer coefficient;
  long dimension = 0;
  long shift = 0;  // F(n + shift, dimension)

  friend bool operator==(const FigurateTerm&, const FigurateTerm&) = default;
};

struct Representation {
  Formula formula;
  long p = 0;
  std::vector<FigurateTerm> terms;
};

/// Term list of a figurate-linear formula. Throws std::invalid_argument for
/// faulhaber and brute, DomainError for p < 1.
Representation representation(Formula formula, long p);

Integer evaluate(const Representation& rep, const Integer& n);
Polynomial expand(const Representation& rep);

/// n^p through the figurate expansion. Requires n >= 1.
Integer power_via_ml1(const Integer& n, long p);

/// Direct accumulation; the oracle for everything else. Requires n >= 0.
Integer sum_brute(const Integer& n, long p);

Integer sum_eq5(const Integer& n, long p);
Integer sum_stirling(const Integer& n, long p);
Integer sum_eulerian(const Integer& n, long p);
Integer sum_variant(const Integer& n, long p);

/// Coefficients of the Faulhaber form, lowest power of T first:
///   p = 2k:   S(n, p) = S(n, 2) * sum_j b_j T^j
///   p = 2k+1: S(n, p) = T^2      * sum_j c_j T^j,    j = 0..k-1.
/// Solved exactly from brute-force samples and checked on extra points.
/// Requires p >= 2.
std::vector<Rational> faulhaber_coefficients(long p);

/// S(n, 2) for even p, T(n)^2 for odd p.
Polynomial faulhaber_prefactor(long p);

/// Requires p >= 2 and n >= 0.
Integer faulhaber_eval(const Integer& n, long p);

/// Value of the chosen formula: n^p for power_ml1, S(n, p) for the rest.
Integer power_sum(Formula formula, const Integer& n, long p);

/// The formula expanded into a single polynomial in n. For brute this is
/// the interpolant of the sampled sums.
Polynomial expand_symbolic(long p, Formula formula);

}  // namespace figurate
