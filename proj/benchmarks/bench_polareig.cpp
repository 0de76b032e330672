#include <benchmark/benchmark.h>

#include <cmath>

#include "polareig/legendre.hpp"
#include "polareig/polar.hpp"
#include "polareig/tridiag.hpp"

using namespace polareig;

static void BM_SturmCount(benchmark::State& state) {
  const polar::GridSpec grid(static_cast<int>(state.range(0)));
  const auto T = polar::build_hamiltonian(0.375, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridiag::sturm_count(T, 1.125));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SturmCount)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_EigenvalueKth(benchmark::State& state) {
  const polar::GridSpec grid(static_cast<int>(state.range(0)));
  const auto T = polar::build_hamiltonian(0.375, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridiag::eigenvalue_kth(T, 0, 1e-10));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigenvalueKth)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_Eigenfunction(benchmark::State& state) {
  const polar::GridSpec grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polar::eigenfunction(0.375, 0, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenfunction)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_ComputeSpectrum(benchmark::State& state) {
  const polar::GridSpec grid(512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polar::compute_spectrum(1, 3, grid, 3));
  }
}
BENCHMARK(BM_ComputeSpectrum);

static void BM_AssocLegendre(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double x = -1.0;
  for (auto _ : state) {
    x = (x >= 1.0) ? -1.0 : x + 1.0 / 64.0;
    benchmark::DoNotOptimize(legendre::assoc_legendre(l, 2, x));
  }
}
BENCHMARK(BM_AssocLegendre)->Arg(4)->Arg(16)->Arg(64);

static void BM_GaussRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(legendre::gauss_rule(order));
  }
}
BENCHMARK(BM_GaussRule)->Arg(8)->Arg(32)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
