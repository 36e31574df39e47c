#pragma once

// The coefficients c(p, l) that expand n^p in figurate numbers,
//
//   n^p = sum_{l=0}^{p-1} (-1)^l c(p, l) F(n, p - l),
//
// computed along independent routes so their agreement can be certified.
// All routes take 1 <= p and 0 <= l <= p - 1 and throw DomainError
// otherwise; the routes indexed by j use j = p - l, 1 <= j <= p.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "figurate/exact.hpp"

namespace figurate {

/// (p - l)! S(p, p - l)
Integer c_closed(long p, long ell);

/// Sum of p! / prod (k_i + 1)! over the constrained k-tuples.
Integer c_enum_k(long p, long ell);

/// Sum of p! / prod j_i! over the constrained j-tuples.
Integer c_enum_j(long p, long ell);

/// c(p, l) = (p - l) [c(p-1, l) + c(p-1, l-1)] with boundaries p! and 1,
/// filled bottom-up into a shared memo triangle.
Integer c_recurrence(long p, long ell);

/// c(p, p - j) as sum_t C(j, t) sum_{s_1+..+s_t = p+t-j, s_i >= 2} p!/prod s_i!
/// for j < p, and p! for j = p.
Integer c_decompose(long p, long j);

/// (p - l)! sum_{i=0}^{l} <<l, i>> C(p + l - 1 - i, 2l)
Integer c_eulerian2(long p, long ell);

/// c(p, p - j) = sum_{r=0}^{j-1} (-1)^r C(j, r) (j - r)^p
Integer c_alternating(long p, long j);

/// One t-group of the decomposition route: C(j, t) times the sum over the
/// compositions of p + t - j into t parts >= 2.
struct DecompositionGroup {
  long t = 0;
  Integer multiplicity;      // C(j, t)
  Integer inner_sum;         // sum of p!/prod s_i! over the compositions
  long compositions = 0;     // number of compositions streamed
};

/// The groups summed by c_decompose, t = 1..j (empty groups included).
/// Requires 1 <= j <= p - 1.
std::vector<DecompositionGroup> decompose_groups(long p, long j);

/// W(p, j) from the binomially weighted groups t = 1..j-1.
Integer w_sum_weighted(long p, long j);
/// W(p, j) as the sum of p!/prod w_i! over compositions of p into j parts
/// >= 1 with at least one part equal to 1.
Integer w_sum_direct(long p, long j);
/// Both forms of W(p, j); throws InvariantError if they differ.
/// Requires 1 <= j <= p - 1.
Integer w_sum(long p, long j);

/// Sum of p!/prod r_i! over the compositions of `total` into `parts` parts
/// each >= min_part. `numerator_factorial` is the p in p!.
Integer composition_sum(long numerator_factorial, long total, long parts, long min_part);

/// N(p, j) = sum_t C(j, t) C(p - j - 1, t - 1)
Integer summand_count_vandermonde(long p, long j);
/// Checks the Vandermonde form against C(p - 1, j - 1); throws
/// InvariantError if they differ. Requires 1 <= j <= p - 1.
Integer summand_count(long p, long j);

enum class Route { closed, enum_k, enum_j, recurrence, decompose, eulerian2, alternating };

inline constexpr Route kAllRoutes[] = {Route::closed,     Route::enum_k,    Route::enum_j,
                                       Route::recurrence, Route::decompose, Route::eulerian2,
                                       Route::alternating};

std::string_view to_string(Route route);
/// Throws std::invalid_argument for an unknown route name.
Route parse_route(std::string_view name);

/// Whether a route walks tuple families and is therefore subject to the
/// size guard.
bool is_enumeration_route(Route route);

/// c(p, l) by the given route.
Integer coefficient(Route route, long p, long ell);

inline constexpr long kDefaultSizeGuard = 14;

/// Lower-triangular table of c(p, l), rows p = 1..pmax, entries l = 0..p-1.
struct CoeffTriangle {
  long pmax = 0;
  std::vector<std::vector<Integer>> rows;

  const Integer& at(long p, long ell) const {
    return rows[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(ell)];
  }
};

CoeffTriangle build_triangle(long pmax, Route route);

struct RouteValue {
  Route route;
  std::optional<Integer> value;  // empty when the route was skipped
};

/// Per-route values for one (p, l). Skipped routes are listed with no value
/// and never counted as disagreement.
struct RouteReport {
  long p = 0;
  long ell = 0;
  long size_guard = kDefaultSizeGuard;
  std::vector<RouteValue> routes;
  bool agree = false;

  std::optional<Integer> consensus() const;
  std::size_t skipped() const;
};

/// Evaluates every route (concurrently) and compares the results.
/// Enumeration routes are skipped when p > size_guard.
RouteReport certify(long p, long ell, long size_guard = kDefaultSizeGuard);

}  // namespace figurate
