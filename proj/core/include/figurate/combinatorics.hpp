#pragma once

// Classical counting sequences: factorials, binomials, multinomials, both
// kinds of Stirling numbers, both kinds of Eulerian numbers and surjection
// counts. The four triangles are filled by their recurrences into
// process-wide memo tables that only ever grow; lookups are thread-safe.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figurate/exact.hpp"

namespace figurate {

Integer factorial(long n);

/// C(n, k); zero when k > n.
Integer binomial(long n, long k);

/// (sum parts)! / prod(part!)
Integer multinomial(std::span<const int> parts);

/// Unsigned Stirling number of the first kind: permutations of k elements
/// with r cycles.
Integer stirling1_unsigned(long k, long r);

/// Stirling number of the second kind: partitions of a k-set into j blocks.
Integer stirling2(long k, long j);

/// First-kind Eulerian number, 1-based in j: eulerian_first(p, 1) == 1, and
/// eulerian_first(p, j) counts permutations of p elements with j - 1
/// descents. Requires 1 <= j <= p.
Integer eulerian_first(long p, long j);

/// Second-kind Eulerian number, 0-based in j: eulerian_second(0, 0) == 1,
/// eulerian_second(l, j) counts Stirling permutations of {1,1,...,l,l} with
/// j ascents.
Integer eulerian_second(long l, long j);

/// Onto maps from an m-set to an n-set, n! S(m, n). Zero when m < n.
Integer surjection_count(long m, long n);

/// Default bound on n^m for surjection_brute.
inline constexpr unsigned long kSurjectionBruteLimit = 100'000'000UL;

/// Counts onto maps by walking all n^m functions. Refuses (DomainError)
/// when n^m exceeds `limit`.
Integer surjection_brute(long m, long n, unsigned long limit = kSurjectionBruteLimit);

enum class TriangleFamily { stirling1, stirling2, eulerian1, eulerian2 };

std::string_view to_string(TriangleFamily family);
/// Throws std::invalid_argument for an unknown name.
TriangleFamily parse_triangle_family(std::string_view name);

/// Rows of one of the memoized triangles.
///
///   stirling1, stirling2: rows k = 0..last, entries r = 0..k
///   eulerian1:            rows p = 1..last, entries j = 1..p
///   eulerian2:            rows l = 0..last, entries j = 0..l
struct NumberTriangle {
  TriangleFamily family;
  long first_row = 0;
  std::vector<std::vector<Integer>> rows;
};

NumberTriangle number_triangle(TriangleFamily family, long last_row);

}  // namespace figurate
