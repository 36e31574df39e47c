#include "figurate/combinatorics.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace figurate {
namespace {

void require_nonnegative(long value, const char* what) {
  if (value < 0) throw DomainError(std::string(what) + " must be nonnegative");
}

/// Row table filled on demand by a row-to-row recurrence. Readers take a
/// shared lock; growth takes the exclusive lock and re-checks.
class MemoTriangle {
 public:
  using NextRow = std::function<std::vector<Integer>(long row, const std::vector<Integer>& prev)>;

  MemoTriangle(long first_row, std::vector<Integer> seed, NextRow next)
      : first_row_(first_row), next_(std::move(next)) {
    rows_.push_back(std::move(seed));
  }

  /// Entry `index` of row `row`, zero when the index is outside the row.
  Integer at(long row, long index) {
    ensure(row);
    std::shared_lock lock(mutex_);
    const auto& r = rows_[static_cast<std::size_t>(row - first_row_)];
    if (index < 0 || index >= static_cast<long>(r.size())) return Integer(0);
    return r[static_cast<std::size_t>(index)];
  }

  std::vector<std::vector<Integer>> rows(long last_row) {
    ensure(last_row);
    std::shared_lock lock(mutex_);
    const auto count = static_cast<std::size_t>(last_row - first_row_ + 1);
    return {rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

 private:
  void ensure(long row) {
    const auto needed = static_cast<std::size_t>(row - first_row_ + 1);
    {
      std::shared_lock lock(mutex_);
      if (rows_.size() >= needed) return;
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() < needed) {
      const long next_index = first_row_ + static_cast<long>(rows_.size());
      rows_.push_back(next_(next_index, rows_.back()));
    }
  }

  long first_row_;
  NextRow next_;
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

Integer entry_or_zero(const std::vector<Integer>& row, long index) {
  if (index < 0 || index >= static_cast<long>(row.size())) return Integer(0);
  return row[static_cast<std::size_t>(index)];
}

// s(k, r) = s(k-1, r-1) + (k-1) s(k-1, r)
MemoTriangle& stirling1_table() {
  static MemoTriangle table(0, {Integer(1)}, [](long k, const std::vector<Integer>& prev) {
    std::vector<Integer> row(static_cast<std::size_t>(k + 1));
    for (long r = 0; r <= k; ++r) {
      row[static_cast<std::size_t>(r)] =
          entry_or_zero(prev, r - 1) + Integer(k - 1) * entry_or_zero(prev, r);
    }
    return row;
  });
  return table;
}

// S(k, j) = j S(k-1, j) + S(k-1, j-1)
MemoTriangle& stirling2_table() {
  static MemoTriangle table(0, {Integer(1)}, [](long k, const std::vector<Integer>& prev) {
    std::vector<Integer> row(static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
      row[static_cast<std::size_t>(j)] =
          Integer(j) * entry_or_zero(prev, j) + entry_or_zero(prev, j - 1);
    }
    return row;
  });
  return table;
}

// <p, j> = j <p-1, j> + (p - j + 1) <p-1, j-1>, stored at index j - 1.
MemoTriangle& eulerian1_table() {
  static MemoTriangle table(1, {Integer(1)}, [](long p, const std::vector<Integer>& prev) {
    std::vector<Integer> row(static_cast<std::size_t>(p));
    for (long j = 1; j <= p; ++j) {
      row[static_cast<std::size_t>(j - 1)] =
          Integer(j) * entry_or_zero(prev, j - 1) + Integer(p - j + 1) * entry_or_zero(prev, j - 2);
    }
    return row;
  });
  return table;
}

// <<l, j>> = (j + 1) <<l-1, j>> + (2l - 1 - j) <<l-1, j-1>>
MemoTriangle& eulerian2_table() {
  static MemoTriangle table(0, {Integer(1)}, [](long l, const std::vector<Integer>& prev) {
    std::vector<Integer> row(static_cast<std::size_t>(l + 1));
    for (long j = 0; j <= l; ++j) {
      row[static_cast<std::size_t>(j)] = Integer(j + 1) * entry_or_zero(prev, j) +
                                         Integer(2 * l - 1 - j) * entry_or_zero(prev, j - 1);
    }
    return row;
  });
  return table;
}

}  // namespace

Integer factorial(long n) {
  require_nonnegative(n, "factorial argument");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  require_nonnegative(n, "binomial n");
  require_nonnegative(k, "binomial k");
  if (k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer multinomial(std::span<const int> parts) {
  long total = 0;
  Integer denominator = 1;
  for (int part : parts) {
    require_nonnegative(part, "multinomial part");
    total += part;
    denominator *= factorial(part);
  }
  Integer result = factorial(total);
  mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), denominator.get_mpz_t());
  return result;
}

Integer stirling1_unsigned(long k, long r) {
  require_nonnegative(k, "stirling1 k");
  require_nonnegative(r, "stirling1 r");
  if (r > k) return Integer(0);
  return stirling1_table().at(k, r);
}

Integer stirling2(long k, long j) {
  require_nonnegative(k, "stirling2 k");
  require_nonnegative(j, "stirling2 j");
  if (j > k) return Integer(0);
  return stirling2_table().at(k, j);
}

Integer eulerian_first(long p, long j) {
  if (p < 1 || j < 1 || j > p) {
    throw DomainError("eulerian_first requires 1 <= j <= p (got p=" + std::to_string(p) +
                      ", j=" + std::to_string(j) + ")");
  }
  return eulerian1_table().at(p, j - 1);
}

Integer eulerian_second(long l, long j) {
  require_nonnegative(l, "eulerian_second l");
  require_nonnegative(j, "eulerian_second j");
  if (j > l) return Integer(0);
  return eulerian2_table().at(l, j);
}

Integer surjection_count(long m, long n) {
  require_nonnegative(m, "surjection m");
  require_nonnegative(n, "surjection n");
  if (m < n) return Integer(0);
  return factorial(n) * stirling2(m, n);
}

Integer surjection_brute(long m, long n, unsigned long limit) {
  require_nonnegative(m, "surjection m");
  require_nonnegative(n, "surjection n");
  if (m < n) return Integer(0);
  if (n == 0) return Integer(m == 0 ? 1 : 0);

  unsigned long space = 1;
  for (long i = 0; i < m; ++i) {
    if (space > limit / static_cast<unsigned long>(n)) {
      throw DomainError("surjection_brute: n^m = " + std::to_string(n) + "^" + std::to_string(m) +
                        " exceeds the enumeration bound " + std::to_string(limit));
    }
    space *= static_cast<unsigned long>(n);
  }

  // Odometer over all maps {0..m-1} -> {0..n-1}, tracking how many targets
  // are hit so each step costs O(1) amortized.
  std::vector<long> image(static_cast<std::size_t>(m), 0);
  std::vector<long> hits(static_cast<std::size_t>(n), 0);
  hits[0] = m;
  long covered = 1;
  unsigned long onto = 0;
  for (;;) {
    if (covered == n) ++onto;
    std::size_t pos = 0;
    while (pos < image.size()) {
      long& v = image[pos];
      if (--hits[static_cast<std::size_t>(v)] == 0) --covered;
      v = (v + 1) % n;
      if (hits[static_cast<std::size_t>(v)]++ == 0) ++covered;
      if (v != 0) break;
      ++pos;
    }
    if (pos == image.size()) break;
  }
  return Integer(onto);
}

std::string_view to_string(TriangleFamily family) {
  switch (family) {
    case TriangleFamily::stirling1:
      return "stirling1";
    case TriangleFamily::stirling2:
      return "stirling2";
    case TriangleFamily::eulerian1:
      return "eulerian1";
    case TriangleFamily::eulerian2:
      return "eulerian2";
  }
  return "unknown";
}

TriangleFamily parse_triangle_family(std::string_view name) {
  for (auto f : {TriangleFamily::stirling1, TriangleFamily::stirling2, TriangleFamily::eulerian1,
                 TriangleFamily::eulerian2}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown triangle family '" + std::string(name) + "'");
}

NumberTriangle number_triangle(TriangleFamily family, long last_row) {
  NumberTriangle out{family, 0, {}};
  switch (family) {
    case TriangleFamily::stirling1:
      require_nonnegative(last_row, "last row");
      out.rows = stirling1_table().rows(last_row);
      break;
    case TriangleFamily::stirling2:
      require_nonnegative(last_row, "last row");
      out.rows = stirling2_table().rows(last_row);
      break;
    case TriangleFamily::eulerian1:
      if (last_row < 1) throw DomainError("eulerian1 rows start at p = 1");
      out.first_row = 1;
      out.rows = eulerian1_table().rows(last_row);
      break;
    case TriangleFamily::eulerian2:
      require_nonnegative(last_row, "last row");
      out.rows = eulerian2_table().rows(last_row);
      break;
  }
  return out;
}

}  // namespace figurate
