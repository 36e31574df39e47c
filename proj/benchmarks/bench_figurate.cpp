// Microbenchmarks for the coefficient routes, tuple generators, Fermat
// inversion and power-sum evaluation.

#include <benchmark/benchmark.h>

#include "figurate/figurate.hpp"

namespace {

using figurate::Integer;
using figurate::Route;

// Middle of the row, where the tuple families are largest.
void run_route(benchmark::State& state, Route route) {
  const long p = state.range(0);
  const long ell = p / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::coefficient(route, p, ell));
  }
}

void BM_CoeffClosed(benchmark::State& state) { run_route(state, Route::closed); }
void BM_CoeffEnumK(benchmark::State& state) { run_route(state, Route::enum_k); }
void BM_CoeffEnumJ(benchmark::State& state) { run_route(state, Route::enum_j); }
void BM_CoeffDecompose(benchmark::State& state) { run_route(state, Route::decompose); }
void BM_CoeffEulerian2(benchmark::State& state) { run_route(state, Route::eulerian2); }
void BM_CoeffAlternating(benchmark::State& state) { run_route(state, Route::alternating); }

// The memo is warm after the first iteration, so this measures lookup.
void BM_CoeffRecurrenceWarm(benchmark::State& state) { run_route(state, Route::recurrence); }

BENCHMARK(BM_CoeffClosed)->DenseRange(8, 24, 8);
BENCHMARK(BM_CoeffEnumK)->DenseRange(8, 14, 2);
BENCHMARK(BM_CoeffEnumJ)->DenseRange(8, 14, 2);
BENCHMARK(BM_CoeffDecompose)->DenseRange(8, 14, 2);
BENCHMARK(BM_CoeffEulerian2)->DenseRange(8, 24, 8);
BENCHMARK(BM_CoeffAlternating)->DenseRange(8, 24, 8);
BENCHMARK(BM_CoeffRecurrenceWarm)->DenseRange(8, 24, 8);

void BM_KTupleStream(benchmark::State& state) {
  const long p = state.range(0);
  long produced = 0;
  for (auto _ : state) {
    for (const auto& t : figurate::enumerate_k_tuples(p, p / 2)) {
      benchmark::DoNotOptimize(t.content());
      ++produced;
    }
  }
  state.SetItemsProcessed(produced);
}
BENCHMARK(BM_KTupleStream)->DenseRange(10, 16, 2);

void BM_CompositionStream(benchmark::State& state) {
  const long total = state.range(0);
  long produced = 0;
  for (auto _ : state) {
    for (const auto& c : figurate::enumerate_compositions(total, total / 3, 1)) {
      benchmark::DoNotOptimize(c.parts.data());
      ++produced;
    }
  }
  state.SetItemsProcessed(produced);
}
BENCHMARK(BM_CompositionStream)->DenseRange(12, 18, 3);

void BM_TriangleRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::build_triangle(state.range(0), Route::recurrence));
  }
}
BENCHMARK(BM_TriangleRecurrence)->Arg(25)->Arg(50);

void BM_FermatInvert(benchmark::State& state) {
  const auto a = figurate::build_fermat(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::invert_exact(a));
  }
}
BENCHMARK(BM_FermatInvert)->Arg(5)->Arg(10)->Arg(20);

void BM_FermatCertify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::certify_inverse(state.range(0)));
  }
}
BENCHMARK(BM_FermatCertify)->Arg(10)->Arg(20);

void run_power_sum(benchmark::State& state, figurate::Formula formula) {
  const Integer n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::power_sum(formula, n, 10));
  }
}

void BM_PowerSumBrute(benchmark::State& state) { run_power_sum(state, figurate::Formula::brute); }
void BM_PowerSumEq5(benchmark::State& state) { run_power_sum(state, figurate::Formula::eq5); }
void BM_PowerSumEulerian(benchmark::State& state) { run_power_sum(state, figurate::Formula::alt2); }
void BM_PowerSumFaulhaber(benchmark::State& state) {
  run_power_sum(state, figurate::Formula::faulhaber);
}

BENCHMARK(BM_PowerSumBrute)->Arg(100)->Arg(10000);
BENCHMARK(BM_PowerSumEq5)->Arg(100)->Arg(10000);
BENCHMARK(BM_PowerSumEulerian)->Arg(100)->Arg(10000);
BENCHMARK(BM_PowerSumFaulhaber)->Arg(100)->Arg(10000);

void BM_ExpandSymbolic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(figurate::expand_symbolic(state.range(0), figurate::Formula::alt3));
  }
}
BENCHMARK(BM_ExpandSymbolic)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
