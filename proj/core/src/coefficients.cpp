#include "figurate/coefficients.hpp"

#include <future>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "figurate/combinatorics.hpp"
#include "figurate/enumeration.hpp"

namespace figurate {
namespace {

void require_ell(long p, long ell) {
  if (p < 1 || ell < 0 || ell > p - 1) {
    throw DomainError("coefficient requires p >= 1 and 0 <= ell <= p-1 (got p=" +
                      std::to_string(p) + ", ell=" + std::to_string(ell) + ")");
  }
}

void require_j(long p, long j, long j_max) {
  if (p < 1 || j < 1 || j > j_max) {
    throw DomainError("requires 1 <= j <= " + std::to_string(j_max) + " (got p=" +
                      std::to_string(p) + ", j=" + std::to_string(j) + ")");
  }
}

Integer as_integer(const Rational& value, const char* route) {
  if (!value.is_integer()) {
    throw InvariantError(std::string(route) + " produced a non-integral coefficient " +
                         to_string(value));
  }
  return value.numerator();
}

/// p! / prod(f_i!) summed exactly. Terms need not be integral individually.
template <class Range, class Offset>
Integer factorial_ratio_sum(long p, Range&& tuples, Offset offset, const char* route) {
  const Integer numerator = factorial(p);
  Rational total;
  for (const auto& tuple : tuples) {
    Integer denominator = 1;
    for (int e : tuple.entries()) denominator *= factorial(e + offset);
    total += Rational(numerator, denominator);
  }
  return as_integer(total, route);
}

class RecurrenceMemo {
 public:
  Integer at(long p, long ell) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<long>(rows_.size()) >= p) return rows_[p - 1][ell];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) < p) {
      const long q = static_cast<long>(rows_.size()) + 1;
      std::vector<Integer> row(static_cast<std::size_t>(q));
      for (long l = 0; l < q; ++l) {
        if (l == 0) {
          row[0] = factorial(q);
        } else if (l == q - 1) {
          row[l] = 1;
        } else {
          const auto& prev = rows_.back();
          row[l] = Integer(q - l) * (prev[l] + prev[l - 1]);
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[p - 1][ell];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

RecurrenceMemo& recurrence_memo() {
  static RecurrenceMemo memo;
  return memo;
}

}  // namespace

Integer c_closed(long p, long ell) {
  require_ell(p, ell);
  return factorial(p - ell) * stirling2(p, p - ell);
}

Integer c_enum_k(long p, long ell) {
  require_ell(p, ell);
  return factorial_ratio_sum(p, enumerate_k_tuples(p, ell), 1, "enum_k");
}

Integer c_enum_j(long p, long ell) {
  require_ell(p, ell);
  return factorial_ratio_sum(p, enumerate_j_tuples(p, ell), 0, "enum_j");
}

Integer c_recurrence(long p, long ell) {
  require_ell(p, ell);
  return recurrence_memo().at(p, ell);
}

Integer composition_sum(long numerator_factorial, long total, long parts, long min_part) {
  if (total > numerator_factorial) {
    throw DomainError("composition_sum: total exceeds the factorial numerator");
  }
  const Integer numerator = factorial(numerator_factorial);
  Integer sum = 0;
  for (const auto& comp : enumerate_compositions(total, parts, min_part)) {
    Integer denominator = 1;
    for (int part : comp.parts) denominator *= factorial(part);
    Integer term;
    mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    sum += term;
  }
  return sum;
}

std::vector<DecompositionGroup> decompose_groups(long p, long j) {
  require_j(p, j, p - 1);
  const Integer numerator = factorial(p);
  std::vector<DecompositionGroup> groups;
  for (long t = 1; t <= j; ++t) {
    DecompositionGroup group{t, binomial(j, t), Integer(0), 0};
    for (const auto& comp : enumerate_compositions(p + t - j, t, 2)) {
      Integer denominator = 1;
      for (int part : comp.parts) denominator *= factorial(part);
      Integer term;
      mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
      group.inner_sum += term;
      ++group.compositions;
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

Integer c_decompose(long p, long j) {
  require_j(p, j, p);
  if (j == p) return factorial(p);
  Integer total = 0;
  for (const auto& g : decompose_groups(p, j)) total += g.multiplicity * g.inner_sum;
  return total;
}

Integer c_eulerian2(long p, long ell) {
  require_ell(p, ell);
  Integer sum = 0;
  for (long i = 0; i <= ell; ++i) {
    const long top = p + ell - 1 - i;
    if (top < 2 * ell) continue;
    sum += eulerian_second(ell, i) * binomial(top, 2 * ell);
  }
  return factorial(p - ell) * sum;
}

Integer c_alternating(long p, long j) {
  require_j(p, j, p);
  Integer sum = 0;
  for (long r = 0; r < j; ++r) {
    const Integer term = binomial(j, r) * power(Integer(j - r), static_cast<unsigned long>(p));
    if (r % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer w_sum_weighted(long p, long j) {
  require_j(p, j, p - 1);
  Integer total = 0;
  for (long t = 1; t <= j - 1; ++t) {
    total += binomial(j, t) * composition_sum(p, p + t - j, t, 2);
  }
  return total;
}

Integer w_sum_direct(long p, long j) {
  require_j(p, j, p - 1);
  const Integer numerator = factorial(p);
  Integer total = 0;
  for (const auto& comp : enumerate_compositions(p, j, 1)) {
    bool has_one = false;
    Integer denominator = 1;
    for (int part : comp.parts) {
      has_one = has_one || part == 1;
      denominator *= factorial(part);
    }
    if (!has_one) continue;
    Integer term;
    mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    total += term;
  }
  return total;
}

Integer w_sum(long p, long j) {
  Integer weighted = w_sum_weighted(p, j);
  const Integer direct = w_sum_direct(p, j);
  if (weighted != direct) {
    throw InvariantError("W(" + std::to_string(p) + "," + std::to_string(j) +
                         ") weighted form " + to_string(weighted) + " != direct form " +
                         to_string(direct));
  }
  return weighted;
}

Integer summand_count_vandermonde(long p, long j) {
  require_j(p, j, p - 1);
  Integer total = 0;
  for (long t = 1; t <= j; ++t) total += binomial(j, t) * binomial(p - j - 1, t - 1);
  return total;
}

Integer summand_count(long p, long j) {
  Integer vandermonde = summand_count_vandermonde(p, j);
  const Integer closed = binomial(p - 1, j - 1);
  if (vandermonde != closed) {
    throw InvariantError("N(" + std::to_string(p) + "," + std::to_string(j) +
                         ") Vandermonde sum disagrees with C(p-1, j-1)");
  }
  return vandermonde;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::closed:
      return "closed";
    case Route::enum_k:
      return "enum_k";
    case Route::enum_j:
      return "enum_j";
    case Route::recurrence:
      return "recurrence";
    case Route::decompose:
      return "decompose";
    case Route::eulerian2:
      return "eulerian2";
    case Route::alternating:
      return "alternating";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  for (Route r : kAllRoutes) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

bool is_enumeration_route(Route route) {
  return route == Route::enum_k || route == Route::enum_j || route == Route::decompose;
}

Integer coefficient(Route route, long p, long ell) {
  require_ell(p, ell);
  switch (route) {
    case Route::closed:
      return c_closed(p, ell);
    case Route::enum_k:
      return c_enum_k(p, ell);
    case Route::enum_j:
      return c_enum_j(p, ell);
    case Route::recurrence:
      return c_recurrence(p, ell);
    case Route::decompose:
      return c_decompose(p, p - ell);
    case Route::eulerian2:
      return c_eulerian2(p, ell);
    case Route::alternating:
      return c_alternating(p, p - ell);
  }
  throw std::invalid_argument("unknown route");
}

CoeffTriangle build_triangle(long pmax, Route route) {
  if (pmax < 1) throw DomainError("build_triangle requires pmax >= 1");
  CoeffTriangle tri{pmax, {}};
  tri.rows.reserve(static_cast<std::size_t>(pmax));
  for (long p = 1; p <= pmax; ++p) {
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(p));
    for (long ell = 0; ell < p; ++ell) row.push_back(coefficient(route, p, ell));
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

std::optional<Integer> RouteReport::consensus() const {
  for (const auto& r : routes) {
    if (r.value) return agree ? r.value : std::nullopt;
  }
  return std::nullopt;
}

std::size_t RouteReport::skipped() const {
  std::size_t n = 0;
  for (const auto& r : routes) n += r.value ? 0 : 1;
  return n;
}

RouteReport certify(long p, long ell, long size_guard) {
  require_ell(p, ell);
  RouteReport report{p, ell, size_guard, {}, false};

  std::vector<std::pair<Route, std::future<Integer>>> pending;
  for (Route route : kAllRoutes) {
    if (is_enumeration_route(route) && p > size_guard) continue;
    pending.emplace_back(route,
                         std::async(std::launch::async, [=] { return coefficient(route, p, ell); }));
  }

  auto it = pending.begin();
  for (Route route : kAllRoutes) {
    if (it != pending.end() && it->first == route) {
      report.routes.push_back({route, it->second.get()});
      ++it;
    } else {
      report.routes.push_back({route, std::nullopt});
    }
  }

  const Integer* reference = nullptr;
  report.agree = true;
  for (const auto& r : report.routes) {
    if (!r.value) continue;
    if (reference == nullptr) {
      reference = &*r.value;
    } else if (*r.value != *reference) {
      report.agree = false;
    }
  }
  return report;
}

}  // namespace figurate
