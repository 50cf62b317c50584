#include <benchmark/benchmark.h>

#include "conclab/conclab.hpp"

using namespace conclab;

static void BM_RdTorusKnot(benchmark::State& state) {
  const auto f = torus_knot_alexander(2, 2 * state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(r_d(f.poly(), 2));
}
BENCHMARK(BM_RdTorusKnot)->RangeMultiplier(4)->Range(1, 256);

static void BM_RdHighDegreeCover(benchmark::State& state) {
  const auto f = torus_knot_alexander(3, 7);
  const auto d = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_d(f.poly(), d));
}
BENCHMARK(BM_RdHighDegreeCover)->RangeMultiplier(2)->Range(2, 512);

static void BM_ExcludedPrimes(benchmark::State& state) {
  std::vector<AlexanderPolynomial> polys;
  for (long k = 1; k <= state.range(0); ++k) polys.push_back(torus_knot_alexander(2, 2 * k + 1));
  const PolySet d(polys);
  for (auto _ : state) benchmark::DoNotOptimize(excluded_primes(d, 2));
}
BENCHMARK(BM_ExcludedPrimes)->Arg(4)->Arg(16)->Arg(64);
