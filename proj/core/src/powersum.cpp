#include "figurate/powersum.hpp"

#include <stdexcept>
#include <string>

#include "figurate/coefficients.hpp"
#include "figurate/combinatorics.hpp"
#include "figurate/fermat.hpp"

namespace figurate {
namespace {

void require_p(long p, long min = 1) {
  if (p < min) throw DomainError("power p must be >= " + std::to_string(min));
}

void require_nonnegative_n(const Integer& n) {
  if (n < 0) throw DomainError("n must be nonnegative");
}

Integer signed_term(Integer value, bool negative) { return negative ? Integer(-value) : value; }

Integer triangular(const Integer& n) { return n * (n + 1) / 2; }

}  // namespace

Integer figurate(const Integer& n, long k) {
  if (k < 1) throw DomainError("figurate dimension must be >= 1");
  Integer product = 1;
  for (long i = 0; i < k; ++i) {
    product *= n + i;
    if (product == 0) return product;
  }
  const Integer kf = factorial(k);
  Integer out;
  mpz_divexact(out.get_mpz_t(), product.get_mpz_t(), kf.get_mpz_t());
  return out;
}

std::string_view to_string(Formula formula) {
  switch (formula) {
    case Formula::power_ml1:
      return "ml1-power";
    case Formula::eq5:
      return "eq5";
    case Formula::alt1:
      return "stir";
    case Formula::alt2:
      return "euler";
    case Formula::alt3:
      return "alt3";
    case Formula::faulhaber:
      return "faulhaber";
    case Formula::brute:
      return "brute";
  }
  return "unknown";
}

Formula parse_formula(std::string_view name) {
  for (Formula f : kAllFormulas) {
    if (to_string(f) == name) return f;
  }
  if (name == "power_ml1") return Formula::power_ml1;
  if (name == "alt1") return Formula::alt1;
  if (name == "alt2") return Formula::alt2;
  throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

bool is_figurate_linear(Formula formula) {
  return formula != Formula::faulhaber && formula != Formula::brute;
}

Representation representation(Formula formula, long p) {
  require_p(p);
  Representation rep{formula, p, {}};
  auto& terms = rep.terms;
  switch (formula) {
    case Formula::power_ml1:
      for (long ell = 0; ell < p; ++ell) {
        terms.push_back({signed_term(c_enum_k(p, ell), ell % 2 != 0), p - ell, 0});
      }
      break;
    case Formula::eq5:
      for (long i = 1; i <= p; ++i) {
        terms.push_back({signed_term(factorial(p - i + 1) * stirling2(p, p - i + 1), i % 2 == 0),
                         p - i + 2, 0});
      }
      break;
    case Formula::alt1:
      for (long j = p; j >= 1; --j) {
        terms.push_back({factorial(j) * stirling2(p, j), j + 1, 1 - j});
      }
      break;
    case Formula::alt2:
      for (long j = p; j >= 1; --j) terms.push_back({eulerian_first(p, j), p + 1, j - p});
      break;
    case Formula::alt3:
      for (long j = p + 1; j >= 1; --j) {
        terms.push_back({factorial(j - 1) * stirling2(p + 1, j), j, 1 - j});
      }
      break;
    case Formula::faulhaber:
    case Formula::brute:
      throw std::invalid_argument(std::string(to_string(formula)) +
                                  " is not a figurate-linear formula");
  }
  return rep;
}

Integer evaluate(const Representation& rep, const Integer& n) {
  Integer total = 0;
  for (const auto& term : rep.terms) {
    total += term.coefficient * figurate(Integer(n + term.shift), term.dimension);
  }
  return total;
}

Polynomial expand(const Representation& rep) {
  Polynomial total;
  for (const auto& term : rep.terms) {
    total += figurate_polynomial(term.dimension).shifted(Integer(term.shift)) *
             Rational(term.coefficient);
  }
  return total;
}

Integer power_via_ml1(const Integer& n, long p) {
  if (n < 1) throw DomainError("power_via_ml1 requires n >= 1");
  return evaluate(representation(Formula::power_ml1, p), n);
}

Integer sum_brute(const Integer& n, long p) {
  require_p(p);
  require_nonnegative_n(n);
  Integer total = 0;
  for (Integer r = 1; r <= n; ++r) total += power(r, static_cast<unsigned long>(p));
  return total;
}

Integer sum_eq5(const Integer& n, long p) {
  require_nonnegative_n(n);
  return evaluate(representation(Formula::eq5, p), n);
}

Integer sum_stirling(const Integer& n, long p) {
  require_nonnegative_n(n);
  return evaluate(representation(Formula::alt1, p), n);
}

Integer sum_eulerian(const Integer& n, long p) {
  require_nonnegative_n(n);
  return evaluate(representation(Formula::alt2, p), n);
}

Integer sum_variant(const Integer& n, long p) {
  require_nonnegative_n(n);
  return evaluate(representation(Formula::alt3, p), n);
}

Polynomial faulhaber_prefactor(long p) {
  require_p(p, 2);
  const Polynomial t = figurate_polynomial(2);
  if (p % 2 == 0) return t * Polynomial({Rational(1, 3), Rational(2, 3)});  // T (2n+1)/3
  return t * t;
}

std::vector<Rational> faulhaber_coefficients(long p) {
  require_p(p, 2);
  const long count = p / 2;
  const Polynomial prefactor = faulhaber_prefactor(p);

  auto reduced = [&](long n) {
    return Rational(sum_brute(Integer(n), p)) / prefactor.evaluate(Integer(n));
  };

  std::vector<Rational> ts, ys;
  for (long n = 1; n <= count; ++n) {
    ts.emplace_back(triangular(Integer(n)));
    ys.push_back(reduced(n));
  }
  const Polynomial in_t = interpolate(ts, ys);

  for (long n = count + 1; n <= count + 3; ++n) {
    if (in_t.evaluate(Rational(triangular(Integer(n)))) != reduced(n)) {
      throw InvariantError("Faulhaber solve for p=" + std::to_string(p) +
                           " leaves a nonzero residual at n=" + std::to_string(n));
    }
  }

  std::vector<Rational> coeffs(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) coeffs[static_cast<std::size_t>(j)] = in_t.coefficient(j);
  return coeffs;
}

namespace {

Rational faulhaber_value(const std::vector<Rational>& coeffs, const Polynomial& prefactor,
                         const Integer& n) {
  const Rational t(triangular(n));
  Rational inner;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) inner = inner * t + *it;
  return prefactor.evaluate(n) * inner;
}

}  // namespace

Integer faulhaber_eval(const Integer& n, long p) {
  require_nonnegative_n(n);
  const Rational value = faulhaber_value(faulhaber_coefficients(p), faulhaber_prefactor(p), n);
  if (!value.is_integer()) throw InvariantError("Faulhaber form produced a non-integer");
  return value.numerator();
}

Integer power_sum(Formula formula, const Integer& n, long p) {
  switch (formula) {
    case Formula::power_ml1:
      return power_via_ml1(n, p);
    case Formula::faulhaber:
      return faulhaber_eval(n, p);
    case Formula::brute:
      return sum_brute(n, p);
    default:
      require_nonnegative_n(n);
      return evaluate(representation(formula, p), n);
  }
}

Polynomial expand_symbolic(long p, Formula formula) {
  require_p(p);
  switch (formula) {
    case Formula::brute: {
      std::vector<Rational> xs, ys;
      for (long n = 0; n <= p + 1; ++n) {
        xs.emplace_back(n);
        ys.emplace_back(sum_brute(Integer(n), p));
      }
      return interpolate(xs, ys);
    }
    case Formula::faulhaber: {
      const auto coeffs = faulhaber_coefficients(p);
      const Polynomial t = figurate_polynomial(2);
      Polynomial inner;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        inner = inner * t + Polynomial::constant(*it);
      }
      return faulhaber_prefactor(p) * inner;
    }
    default:
      return expand(representation(formula, p));
  }
}

}  // namespace figurate
