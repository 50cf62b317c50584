#include <benchmark/benchmark.h>

#include "conclab/conclab.hpp"

using namespace conclab;

static void BM_DLensTable(benchmark::State& state) {
  const long p = state.range(0);  // odd, so q = 2 is coprime
  for (auto _ : state) {
    for (long i = 0; i < p; ++i) benchmark::DoNotOptimize(d_lens(p, 2, i));
  }
}
BENCHMARK(BM_DLensTable)->Arg(11)->Arg(101)->Arg(1001);

static void BM_DLensDeepRecursion(benchmark::State& state) {
  // Consecutive Fibonacci numbers maximize the Euclidean descent.
  long a = 1, b = 1;
  for (long k = 0; k < state.range(0); ++k) {
    const long c = a + b;
    a = b;
    b = c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(d_lens(b, a, b / 3));
}
BENCHMARK(BM_DLensDeepRecursion)->Arg(10)->Arg(20)->Arg(40);

static void BM_LargeSurgeryTable(benchmark::State& state) {
  const long q = state.range(0);
  const VSequence v = v_sequence_lspace(torus_knot_alexander(q, q - 1));
  for (auto _ : state) benchmark::DoNotOptimize(large_surgery_table(q * q, v));
}
BENCHMARK(BM_LargeSurgeryTable)->Arg(3)->Arg(7)->Arg(13);

static void BM_SubgroupsElementary(benchmark::State& state) {
  const long p = state.range(0);
  const FiniteAbelianGroup g({p, p, p});
  for (auto _ : state) benchmark::DoNotOptimize(subgroups_of_order(g, p));
}
BENCHMARK(BM_SubgroupsElementary)->Arg(2)->Arg(3)->Arg(5)->Arg(7);

static void BM_SquareRootSubgroups(benchmark::State& state) {
  const long p = state.range(0);
  const FiniteAbelianGroup g({p, p * p, p * p * p});
  for (auto _ : state) benchmark::DoNotOptimize(square_root_subgroups(g, p));
}
BENCHMARK(BM_SquareRootSubgroups)->Arg(2)->Arg(3);
