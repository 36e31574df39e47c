#include "cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>

#include "cli/reference_data.hpp"
#include "figurate/figurate.hpp"

namespace figurate::cli {

using figurate::to_string;

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  /// Runs `body`; it returns an empty string on success or a failure detail.
  /// Exceptions are reported as failures.
  void check(long p, long ell, std::string name, const std::function<std::string()>& body) {
    CheckResult r{suite_, p, ell, std::move(name), CheckStatus::pass, ""};
    try {
      r.detail = body();
      if (!r.detail.empty()) r.status = CheckStatus::fail;
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  void skip(long p, long ell, std::string name, std::string reason) {
    results_.push_back({suite_, p, ell, std::move(name), CheckStatus::skipped, std::move(reason)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string mismatch(const std::string& what, const Integer& got, const Integer& want) {
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

std::string guard_reason(long guard) {
  return "p exceeds the enumeration size guard (" + std::to_string(guard) + ")";
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> coeff_suite(long pmax, long guard) {
  Recorder rec("coeff");

  const long table_rows = std::min<long>(pmax, 9);
  rec.check(0, -1, "reference coefficient table reproduction (rows 1.." + std::to_string(table_rows) + ")",
            [&]() -> std::string {
              for (Route route : {Route::closed, Route::recurrence}) {
                const auto tri = build_triangle(table_rows, route);
                for (long p = 1; p <= table_rows; ++p) {
                  for (long l = 0; l < p; ++l) {
                    const Integer want(static_cast<long>(reference::kCoefficientTable[p - 1][l]));
                    if (tri.at(p, l) != want) {
                      return mismatch(std::string(to_string(route)) + " c(" + std::to_string(p) +
                                          "," + std::to_string(l) + ")",
                                      tri.at(p, l), want);
                    }
                  }
                }
              }
              return "";
            });

  for (long p = 1; p <= pmax; ++p) {
    const bool enumerate = p <= guard;
    for (long l = 0; l < p; ++l) {
      if (enumerate) {
        rec.check(p, l, "agreement of all seven routes", [&]() -> std::string {
          const auto report = certify(p, l, guard);
          if (report.agree) return "";
          std::string detail = "routes disagree:";
          for (const auto& r : report.routes) {
            detail += " " + std::string(to_string(r.route)) + "=" + to_string(*r.value);
          }
          return detail;
        });
      } else {
        rec.check(p, l, "agreement of the non-enumeration routes", [&]() -> std::string {
          return certify(p, l, guard).agree ? "" : "routes disagree";
        });
        rec.skip(p, l, "enumeration routes", guard_reason(guard));
      }
    }

    rec.check(p, -1, "boundary values c(p,0) = p! and c(p,p-1) = 1", [&]() -> std::string {
      for (Route route : kAllRoutes) {
        if (is_enumeration_route(route) && !enumerate) continue;
        if (coefficient(route, p, 0) != factorial(p)) return std::string(to_string(route)) + " c(p,0)";
        if (coefficient(route, p, p - 1) != 1) return std::string(to_string(route)) + " c(p,p-1)";
      }
      return "";
    });

    rec.check(p, -1, "alternating row sum equals 1", [&]() -> std::string {
      Integer sum = 0;
      for (long l = 0; l < p; ++l) sum += (l % 2 == 0 ? 1 : -1) * c_recurrence(p, l);
      return sum == 1 ? "" : mismatch("alternating sum", sum, Integer(1));
    });

    if (p >= 2) {
      rec.check(p, 1, "c(p,1) = (p-1) p!/2", [&]() -> std::string {
        const Rational want = Rational(Integer(p - 1) * factorial(p), Integer(2));
        return Rational(c_closed(p, 1)) == want ? "" : "closed sub-formula mismatch";
      });
    }
    if (p >= 3) {
      rec.check(p, 2, "c(p,2) = p! (p-2)(p-5/3)/8", [&]() -> std::string {
        const Rational want = Rational(factorial(p)) * Rational(p - 2) *
                              (Rational(p) - Rational(5, 3)) / Rational(8);
        return Rational(c_closed(p, 2)) == want ? "" : "closed sub-formula mismatch";
      });
    }

    rec.check(p, -1, "c(p,p-j) equals the surjection count for every j", [&]() -> std::string {
      for (long j = 1; j <= p; ++j) {
        const Integer c = c_closed(p, p - j);
        if (c != surjection_count(p, j)) return mismatch("surjection_count", surjection_count(p, j), c);
        if (p <= 7 && c != surjection_brute(p, j)) return "brute-force surjection count differs";
      }
      return "";
    });

    for (long j = 1; j <= p - 1; ++j) {
      if (!enumerate) {
        rec.skip(p, p - j, "composition split and summand count (j=" + std::to_string(j) + ")",
                 guard_reason(guard));
        continue;
      }
      rec.check(p, p - j, "composition split: parts>=1 sum = parts>=2 sum + W (j=" +
                               std::to_string(j) + ")",
                [&]() -> std::string {
                  const Integer lhs = composition_sum(p, p, j, 1);
                  const Integer rhs = composition_sum(p, p, j, 2) + w_sum(p, j);
                  if (lhs != rhs) return mismatch("split", rhs, lhs);
                  return lhs == c_closed(p, p - j) ? "" : "split sum differs from c(p,p-j)";
                });
      rec.check(p, p - j, "summand count N(p,j) = C(p-1,j-1) = streamed count (j=" +
                               std::to_string(j) + ")",
                [&]() -> std::string {
                  const Integer n = summand_count(p, j);
                  Integer streamed = 0;
                  for (const auto& g : decompose_groups(p, j)) {
                    streamed += g.multiplicity * g.compositions;
                  }
                  return streamed == n ? "" : mismatch("streamed", streamed, n);
                });
    }
  }
  return rec.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> enumeration_suite(long pmax, long guard) {
  Recorder rec("enumeration");
  for (long p = 1; p <= pmax; ++p) {
    if (p > guard) {
      rec.skip(p, -1, "tuple generators", guard_reason(guard));
      continue;
    }
    for (long l = 0; l < p; ++l) {
      rec.check(p, l, "k-tuple constraints, uniqueness and j-tuple bijection", [&]() -> std::string {
        std::multiset<std::vector<int>> shifted;
        std::set<std::vector<int>> seen;
        for (const auto& t : enumerate_k_tuples(p, l)) {
          if (t.content() != l) return "content mismatch";
          if (t.support() != static_cast<long>(t.length()) + l + 1 - p) return "support mismatch";
          const auto& e = t.entries();
          for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] > 0 && e[i + 1] > 0) return "adjacent positive entries";
          }
          if (!seen.insert(e).second) return "duplicate k-tuple";
          std::vector<int> j = e;
          for (int& x : j) ++x;
          shifted.insert(std::move(j));
        }
        std::multiset<std::vector<int>> jtuples;
        for (const auto& t : enumerate_j_tuples(p, l)) jtuples.insert(t.entries());
        return shifted == jtuples ? "" : "j-tuples are not the +1 image of the k-tuples";
      });
    }
    rec.check(p, -1, "composition count C(T-1,k-1) for T = p", [&]() -> std::string {
      for (long k = 1; k <= p; ++k) {
        long count = 0;
        std::set<std::vector<int>> seen;
        for (const auto& c : enumerate_compositions(p, k, 1)) {
          ++count;
          if (!seen.insert(c.parts).second) return "duplicate composition";
        }
        if (Integer(count) != binomial(p - 1, k - 1)) return "count mismatch at k=" + std::to_string(k);
      }
      return "";
    });
  }
  return rec.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> fermat_suite(long pmax) {
  Recorder rec("fermat");
  rec.check(0, -1, "A_5 and its inverse match the reference displays", []() -> std::string {
    const auto a = build_fermat(5);
    const auto inv = invert_exact(a);
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t j = 1; j <= 5; ++j) {
        if (a(k, j) != parse_rational(reference::kFermat5[k - 1][j - 1])) return "A_5 entry differs";
        if (inv(k, j) != Rational(static_cast<long>(reference::kFermat5Inverse[k - 1][j - 1]))) {
          return "inverse entry differs";
        }
      }
    }
    return inv == inverse_closed(5) ? "" : "A_5 inverse differs from the closed form";
  });

  for (long p = 1; p <= pmax; ++p) {
    rec.check(p, -1, "A_p A_p^-1 = A_p^-1 A_p = I and forward substitution matches closed form",
              [&]() -> std::string { return certify_inverse(p) ? "" : "inverse certification failed"; });
    rec.check(p, -1, "det A_p = prod 1/k!", [&]() -> std::string {
      Rational want = 1;
      for (long k = 1; k <= p; ++k) want /= Rational(factorial(k));
      const Rational det = triangular_determinant(build_fermat(p));
      return det == want && !det.is_zero() ? "" : "determinant mismatch";
    });
    rec.check(p, -1, "figurate polynomial equals row p of A_p and C(n+p-1,p) on n=1..50",
              [&]() -> std::string {
                const Polynomial f = figurate_polynomial(p);
                const auto row = build_fermat(p).row(static_cast<std::size_t>(p));
                for (long r = 1; r <= p; ++r) {
                  if (f.coefficient(static_cast<std::size_t>(r)) != row[static_cast<std::size_t>(r - 1)]) {
                    return "coefficient mismatch at n^" + std::to_string(r);
                  }
                }
                if (!f.coefficient(0).is_zero()) return "nonzero constant term";
                for (long n = 1; n <= 50; ++n) {
                  if (f.evaluate(Integer(n)) != Rational(binomial(n + p - 1, p))) {
                    return "value mismatch at n=" + std::to_string(n);
                  }
                }
                return "";
              });
    rec.check(p, -1, "last row of the inverse is the signed coefficient row", [&]() -> std::string {
      const auto inv = inverse_closed(p);
      for (long i = 1; i <= p; ++i) {
        Integer want = c_recurrence(p, p - i);
        if ((p - i) % 2 != 0) want = -want;
        if (inv(static_cast<std::size_t>(p), static_cast<std::size_t>(i)) != Rational(want)) {
          return "entry " + std::to_string(i) + " differs";
        }
      }
      return "";
    });
  }
  return rec.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> orthogonality_suite(long pmax) {
  Recorder rec("orthogonality");
  for (long k = 0; k <= pmax; ++k) {
    rec.check(k, -1, "Stirling orthogonality relations for j = 0.." + std::to_string(pmax),
              [&]() -> std::string {
                for (long j = 0; j <= pmax; ++j) {
                  Integer first = 0, second = 0;
                  for (long r = 0; r <= k; ++r) {
                    const int sign = r % 2 == 0 ? 1 : -1;
                    first += sign * stirling1_unsigned(k, r) * stirling2(r, j);
                    second += sign * stirling2(k, r) * stirling1_unsigned(r, j);
                  }
                  const Integer want = k == j ? Integer(k % 2 == 0 ? 1 : -1) : Integer(0);
                  if (first != want || second != want) return "fails at j=" + std::to_string(j);
                }
                return "";
              });
  }
  return rec.take();
}

// ---------------------------------------------------------------------------

std::string compare_terms(const Representation& rep, const std::vector<std::int64_t>& coeffs) {
  if (rep.terms.size() != coeffs.size()) return std::string(to_string(rep.formula)) + " term count";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (rep.terms[i].coefficient != Integer(static_cast<long>(coeffs[i]))) {
      return std::string(to_string(rep.formula)) + " term " + std::to_string(i + 1);
    }
  }
  return "";
}

std::vector<CheckResult> powersum_suite(long pmax, long guard) {
  Recorder rec("powersum");

  rec.check(0, -1, "four alternative expansions of the p=8 power sum carry the reference coefficients",
            []() -> std::string {
              for (const auto& [formula, coeffs] :
                   std::vector<std::pair<Formula, std::vector<std::int64_t>>>{
                       {Formula::eq5, reference::kPowerSum8Eq5},
                       {Formula::alt1, reference::kPowerSum8Stirling},
                       {Formula::alt2, reference::kPowerSum8Eulerian},
                       {Formula::alt3, reference::kPowerSum8Variant}}) {
                const auto rep = representation(formula, 8);
                if (auto err = compare_terms(rep, coeffs); !err.empty()) return err;
              }
              const Polynomial want = expand_symbolic(8, Formula::brute);
              for (Formula f : {Formula::eq5, Formula::alt1, Formula::alt2, Formula::alt3}) {
                if (!poly_equal(expand_symbolic(8, f), want)) return "expansions disagree";
              }
              return "";
            });
  rec.check(0, -1, "sum of cubes equals the squared triangular number", []() -> std::string {
    const Polynomial t = figurate_polynomial(2);
    if (!poly_equal(expand_symbolic(3, Formula::faulhaber), t * t)) return "symbolic mismatch";
    if (!poly_equal(expand_symbolic(3, Formula::brute), t * t)) return "brute interpolant mismatch";
    return "";
  });

  for (long p = 1; p <= pmax; ++p) {
    rec.check(p, -1, "every evaluator equals the brute-force sum on n = 0..100", [&]() -> std::string {
      for (long n = 0; n <= 100; ++n) {
        const Integer want = sum_brute(Integer(n), p);
        const Integer values[] = {sum_eq5(Integer(n), p), sum_stirling(Integer(n), p),
                                  sum_eulerian(Integer(n), p), sum_variant(Integer(n), p)};
        for (const auto& v : values) {
          if (v != want) return "mismatch at n=" + std::to_string(n);
        }
        if (p >= 2 && faulhaber_eval(Integer(n), p) != want) {
          return "Faulhaber mismatch at n=" + std::to_string(n);
        }
      }
      return "";
    });
    if (p <= guard) {
      rec.check(p, -1, "n^p reproduced by the figurate expansion on n = 1..100", [&]() -> std::string {
        const auto rep = representation(Formula::power_ml1, p);
        for (long n = 1; n <= 100; ++n) {
          if (evaluate(rep, Integer(n)) != power(Integer(n), static_cast<unsigned long>(p))) {
            return "mismatch at n=" + std::to_string(n);
          }
        }
        return poly_equal(expand(rep), Polynomial::monomial(1, static_cast<std::size_t>(p)))
                   ? ""
                   : "symbolic expansion is not n^p";
      });
    } else {
      rec.skip(p, -1, "n^p reproduced by the figurate expansion", guard_reason(guard));
    }
    rec.check(p, -1, "symbolic expansions agree, degree p+1, zero constant term", [&]() -> std::string {
      const Polynomial want = expand_symbolic(p, Formula::brute);
      if (want.degree() != p + 1 || !want.coefficient(0).is_zero()) return "brute interpolant shape";
      for (Formula f : {Formula::eq5, Formula::alt1, Formula::alt2, Formula::alt3}) {
        if (!poly_equal(expand_symbolic(p, f), want)) return std::string(to_string(f)) + " differs";
      }
      if (p >= 2 && !poly_equal(expand_symbolic(p, Formula::faulhaber), want)) return "faulhaber differs";
      return "";
    });
    rec.check(p, -1, "Eulerian expansion coefficients are palindromic", [&]() -> std::string {
      const auto rep = representation(Formula::alt2, p);
      for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        if (rep.terms[i].coefficient != rep.terms[rep.terms.size() - 1 - i].coefficient) {
          return "not palindromic";
        }
      }
      return "";
    });
    if (p >= 2) {
      rec.check(p, -1, "Faulhaber coefficients are all nonzero", [&]() -> std::string {
        for (const auto& c : faulhaber_coefficients(p)) {
          if (c.is_zero()) return "zero coefficient";
        }
        return "";
      });
    }
    rec.check(p, -1, "figurate roots and telescoping F(n,p) = sum F(i,p-1)", [&]() -> std::string {
      for (long n = 0; n >= -(p - 1); --n) {
        if (figurate(Integer(n), p) != 0) return "nonzero at root n=" + std::to_string(n);
      }
      if (p >= 2) {
        Integer running = 0;
        for (long n = 1; n <= 50; ++n) {
          running += figurate(Integer(n), p - 1);
          if (figurate(Integer(n), p) != running) return "telescoping fails at n=" + std::to_string(n);
        }
      }
      return "";
    });
  }
  return rec.take();
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::size_t VerifyReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coeff", "enumeration", "fermat", "orthogonality",
                                                 "powersum"};
  return names;
}

VerifyReport verify(const std::vector<std::string>& suites, long pmax, long size_guard) {
  if (pmax < 1) throw std::invalid_argument("verify requires pmax >= 1");
  std::set<std::string> selected;
  for (const auto& s : suites) {
    if (s == "all") {
      selected.insert(suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
      selected.insert(s);
    } else {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  if (selected.empty()) selected.insert(suite_names().begin(), suite_names().end());

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<std::vector<CheckResult>>> running;
  for (const auto& s : selected) {
    running.push_back(std::async(std::launch::async, [=]() {
      if (s == "coeff") return coeff_suite(pmax, size_guard);
      if (s == "enumeration") return enumeration_suite(pmax, size_guard);
      if (s == "fermat") return fermat_suite(pmax);
      if (s == "orthogonality") return orthogonality_suite(pmax);
      return powersum_suite(pmax, size_guard);
    }));
  }

  VerifyReport report;
  report.version = FIGURATE_VERSION;
  report.suites.assign(selected.begin(), selected.end());
  report.pmax = pmax;
  report.size_guard = size_guard;
  for (auto& f : running) {
    auto part = f.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return std::tie(a.suite, a.p, a.ell) < std::tie(b.suite, b.p, b.ell);
                   });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace figurate::cli
