#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "cli/reference_data.hpp"
#include "figurate/coefficients.hpp"
#include "figurate/combinatorics.hpp"
#include "figurate/enumeration.hpp"
#include "oracles.hpp"

namespace figurate {
namespace {

Integer two_pow_minus_two(long p) { return power(Integer(2), static_cast<unsigned long>(p)) - 2; }

TEST(CoefficientRoutes, ClosedExamples) {
  EXPECT_EQ(c_closed(5, 2), 150);
  EXPECT_EQ(c_closed(1, 0), 1);
  EXPECT_EQ(c_closed(9, 5), 186480);
  EXPECT_THROW(c_closed(4, 4), DomainError);
  EXPECT_THROW(c_closed(0, 0), DomainError);
}

TEST(CoefficientRoutes, EnumKExamples) {
  EXPECT_EQ(c_enum_k(5, 1), 240);
  EXPECT_EQ(c_enum_k(5, 4), 1);
  EXPECT_EQ(c_enum_k(5, 3), 30);
}

TEST(CoefficientRoutes, EnumJExamples) {
  EXPECT_EQ(c_enum_j(4, 2), two_pow_minus_two(4));
  EXPECT_EQ(c_enum_j(4, 2), 14);
  EXPECT_EQ(c_enum_j(5, 0), 120);
  EXPECT_EQ(c_enum_j(6, 3), 540);
}

TEST(CoefficientRoutes, RecurrenceExamples) {
  EXPECT_EQ(c_recurrence(9, 3), 6 * (c_recurrence(8, 3) + c_recurrence(8, 2)));
  EXPECT_EQ(c_recurrence(9, 3), 1905120);
  EXPECT_EQ(6 * (Integer(126000) + 191520), 1905120);
  for (long p = 1; p <= 20; ++p) EXPECT_EQ(c_recurrence(p, 0), factorial(p));
  EXPECT_EQ(c_recurrence(7, 4), 1806);
}

TEST(CoefficientRoutes, DecomposeExamples) {
  EXPECT_EQ(c_decompose(9, 4), 186480);
  for (long p = 1; p <= 15; ++p) {
    EXPECT_EQ(c_decompose(p, p), factorial(p));
    EXPECT_EQ(c_decompose(p, 1), 1);
  }
  EXPECT_THROW(c_decompose(5, 0), DomainError);
  EXPECT_THROW(c_decompose(5, 6), DomainError);
}

TEST(CoefficientRoutes, Eulerian2Examples) {
  for (long p = 1; p <= 15; ++p) EXPECT_EQ(c_eulerian2(p, 0), factorial(p));
  EXPECT_EQ(c_eulerian2(5, 2), 150);
  EXPECT_EQ(c_eulerian2(8, 4), 40824);
}

TEST(CoefficientRoutes, AlternatingExamples) {
  for (long p = 2; p <= 20; ++p) EXPECT_EQ(c_alternating(p, 2), two_pow_minus_two(p));
  EXPECT_EQ(c_alternating(6, 2), 62);
  for (long p = 3; p <= 20; ++p) {
    const auto u = static_cast<unsigned long>(p);
    EXPECT_EQ(c_alternating(p, 3), power(Integer(3), u) - 3 * power(Integer(2), u) + 3);
  }
  EXPECT_EQ(c_alternating(7, 3), 1806);
  EXPECT_EQ(c_alternating(9, 4), power(Integer(4), 9) - 4 * power(Integer(3), 9) +
                                     6 * power(Integer(2), 9) - 4);
  EXPECT_EQ(c_alternating(9, 4), 186480);
}

TEST(CoefficientRoutes, ReferenceTableByEveryRoute) {
  const auto& table = reference::kCoefficientTable;
  for (Route route : kAllRoutes) {
    const CoeffTriangle tri = build_triangle(9, route);
    ASSERT_EQ(tri.rows.size(), table.size());
    for (std::size_t p = 0; p < table.size(); ++p) {
      for (std::size_t ell = 0; ell < table[p].size(); ++ell) {
        EXPECT_EQ(tri.rows[p][ell], Integer(table[p][ell]))
            << to_string(route) << " p=" << p + 1 << " ell=" << ell;
      }
    }
  }
}

TEST(CoefficientRoutes, EnumerationRoutesMatchTupleOracle) {
  for (int p = 1; p <= 8; ++p) {
    for (int ell = 0; ell < p; ++ell) {
      const Rational k = oracle::factorial_ratio_sum(p, oracle::brute_k_tuples(p, ell), 1);
      const Rational j = oracle::factorial_ratio_sum(p, oracle::brute_j_tuples(p, ell), 0);
      EXPECT_EQ(Rational(c_enum_k(p, ell)), k);
      EXPECT_EQ(Rational(c_enum_j(p, ell)), j);
    }
  }
}

TEST(CoefficientRoutes, AllRoutesAgreeUpToTwelve) {
  for (long p = 1; p <= 12; ++p) {
    for (long ell = 0; ell < p; ++ell) {
      const Integer expected = c_closed(p, ell);
      for (Route route : kAllRoutes) {
        EXPECT_EQ(coefficient(route, p, ell), expected) << to_string(route) << " " << p << "," << ell;
      }
    }
  }
}

TEST(CoefficientRoutes, NonEnumerationRoutesAgreeUpToTwentyFive) {
  for (long p = 13; p <= 25; ++p) {
    for (long ell = 0; ell < p; ++ell) {
      const Integer expected = c_closed(p, ell);
      EXPECT_EQ(c_recurrence(p, ell), expected);
      EXPECT_EQ(c_eulerian2(p, ell), expected);
      EXPECT_EQ(c_alternating(p, p - ell), expected);
    }
  }
}

TEST(CoefficientRows, BoundariesAlternatingSumAndPositivity) {
  const CoeffTriangle tri = build_triangle(25, Route::recurrence);
  for (long p = 1; p <= 25; ++p) {
    EXPECT_EQ(tri.at(p, 0), factorial(p));
    EXPECT_EQ(tri.at(p, p - 1), 1);
    Integer alternating = 0;
    for (long ell = 0; ell < p; ++ell) {
      EXPECT_GT(tri.at(p, ell), 0);
      alternating += ell % 2 == 0 ? tri.at(p, ell) : Integer(-tri.at(p, ell));
    }
    EXPECT_EQ(alternating, 1) << p;
  }
}

TEST(CoefficientRows, LowOrderClosedForms) {
  for (long p = 2; p <= 25; ++p) {
    const Rational expected = Rational(1, 2) * Rational(p - 1) * Rational(factorial(p));
    EXPECT_EQ(Rational(c_closed(p, 1)), expected);
  }
  for (long p = 3; p <= 25; ++p) {
    const Rational expected = Rational(1, 8) * Rational(factorial(p)) * Rational(p - 2) *
                              (Rational(p) - Rational(5, 3));
    EXPECT_TRUE(expected.is_integer());
    EXPECT_EQ(Rational(c_closed(p, 2)), expected);
  }
}

TEST(CoefficientRows, SurjectionIdentity) {
  for (long p = 1; p <= 25; ++p) {
    for (long j = 1; j <= p; ++j) EXPECT_EQ(c_closed(p, p - j), surjection_count(p, j));
  }
  for (long p = 1; p <= 7; ++p) {
    for (long j = 1; j <= p; ++j) EXPECT_EQ(c_alternating(p, j), surjection_brute(p, j));
  }
}

TEST(Decomposition, NineFourGroups) {
  // Multiplicities 4, 6, 4, 1 times 9! [1/6!], [2/(2!5!) + 2/(3!4!)],
  // [3/(2!2!4!) + 3/(2!3!3!)], [4/(2!2!2!3!)], compared group by group.
  const Rational f9 = Rational(factorial(9));
  const auto inv = [](long v) { return Rational(Integer(1), factorial(v)); };
  const std::vector<Rational> expected_inner = {
      f9 * inv(6),
      f9 * (Rational(2) * inv(2) * inv(5) + Rational(2) * inv(3) * inv(4)),
      f9 * (Rational(3) * inv(2) * inv(2) * inv(4) + Rational(3) * inv(2) * inv(3) * inv(3)),
      f9 * Rational(4) * inv(2) * inv(2) * inv(2) * inv(3),
  };
  const std::vector<long> expected_compositions = {1, 4, 6, 4};
  const std::vector<long> expected_multiplicity = {4, 6, 4, 1};

  const auto groups = decompose_groups(9, 4);
  ASSERT_EQ(groups.size(), 4u);
  Integer total = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_EQ(groups[i].t, static_cast<long>(i) + 1);
    EXPECT_EQ(groups[i].multiplicity, expected_multiplicity[i]);
    EXPECT_EQ(Rational(groups[i].inner_sum), expected_inner[i]);
    EXPECT_EQ(groups[i].compositions, expected_compositions[i]);
    total += groups[i].multiplicity * groups[i].inner_sum;
  }
  EXPECT_EQ(total, 186480);
  EXPECT_EQ(4 * multinomial(std::vector<int>{2, 2, 2, 3}), 30240);
}

TEST(WSum, Examples) {
  EXPECT_EQ(w_sum(4, 2), 8);
  for (long p = 2; p <= 12; ++p) EXPECT_EQ(w_sum(p, 1), 0);
  EXPECT_THROW(w_sum(4, 4), DomainError);
  EXPECT_THROW(w_sum(4, 0), DomainError);
}

TEST(WSum, MatchesCompositionOracle) {
  for (int p = 2; p <= 9; ++p) {
    for (int j = 1; j < p; ++j) {
      Rational direct;
      for (const auto& c : oracle::brute_compositions(p, j, 1)) {
        if (std::find(c.begin(), c.end(), 1) == c.end()) continue;
        Integer den = 1;
        for (int part : c) den *= oracle::factorial_loop(part);
        direct += Rational(oracle::factorial_loop(p), den);
      }
      EXPECT_EQ(Rational(w_sum(p, j)), direct) << p << "," << j;
    }
  }
}

TEST(WSum, CompositionSplit) {
  for (long p = 2; p <= 12; ++p) {
    for (long j = 1; j < p; ++j) {
      EXPECT_EQ(composition_sum(p, p, j, 1), composition_sum(p, p, j, 2) + w_sum(p, j));
      EXPECT_EQ(composition_sum(p, p, j, 1), c_alternating(p, j));
    }
  }
}

TEST(SummandCount, Examples) {
  EXPECT_EQ(summand_count(9, 4), 56);
  for (long p = 2; p <= 15; ++p) EXPECT_EQ(summand_count(p, 1), 1);
  long streamed = 0;
  for (const auto& g : decompose_groups(6, 3)) streamed += g.compositions * g.multiplicity.get_si();
  EXPECT_EQ(streamed, 10);
  EXPECT_EQ(summand_count(6, 3), 10);
}

TEST(SummandCount, MatchesStreamedCompositions) {
  for (long p = 2; p <= 12; ++p) {
    for (long j = 1; j < p; ++j) {
      long streamed = 0;
      for (const auto& g : decompose_groups(p, j)) streamed += g.compositions * g.multiplicity.get_si();
      EXPECT_EQ(summand_count_vandermonde(p, j), binomial(p - 1, j - 1));
      EXPECT_EQ(Integer(streamed), summand_count(p, j)) << p << "," << j;
    }
  }
}

TEST(BuildTriangle, SmallCases) {
  for (Route route : kAllRoutes) {
    const CoeffTriangle one = build_triangle(1, route);
    ASSERT_EQ(one.rows.size(), 1u);
    EXPECT_EQ(one.rows[0], std::vector<Integer>{1});
  }
  const CoeffTriangle five = build_triangle(5, Route::enum_k);
  EXPECT_EQ(five.rows.back(), (std::vector<Integer>{120, 240, 150, 30, 1}));
  EXPECT_THROW(build_triangle(0, Route::closed), DomainError);
}

TEST(Routes, NamesRoundTrip) {
  for (Route route : kAllRoutes) EXPECT_EQ(parse_route(to_string(route)), route);
  EXPECT_THROW(parse_route("guess"), std::invalid_argument);
  EXPECT_TRUE(is_enumeration_route(Route::enum_k));
  EXPECT_TRUE(is_enumeration_route(Route::decompose));
  EXPECT_FALSE(is_enumeration_route(Route::alternating));
}

TEST(Certify, Examples) {
  const RouteReport five = certify(5, 2);
  EXPECT_TRUE(five.agree);
  EXPECT_EQ(five.routes.size(), std::size(kAllRoutes));
  EXPECT_EQ(five.skipped(), 0u);
  for (const auto& rv : five.routes) EXPECT_EQ(rv.value, Integer(150));

  const RouteReport nine = certify(9, 5);
  EXPECT_TRUE(nine.agree);
  EXPECT_EQ(nine.consensus(), Integer(186480));

  const RouteReport twelve = certify(12, 6);
  EXPECT_TRUE(twelve.agree);
  EXPECT_EQ(twelve.consensus(), c_closed(12, 6));
}

TEST(Certify, GuardMarksEnumerationRoutesSkipped) {
  const RouteReport report = certify(10, 4, 9);
  EXPECT_TRUE(report.agree);
  EXPECT_EQ(report.skipped(), 3u);
  for (const auto& rv : report.routes) {
    EXPECT_EQ(rv.value.has_value(), !is_enumeration_route(rv.route));
  }
  EXPECT_EQ(report.consensus(), c_closed(10, 4));
}

}  // namespace
}  // namespace figurate
