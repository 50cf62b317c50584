#include <benchmark/benchmark.h>

#include "conclab/conclab.hpp"

using namespace conclab;

namespace {

// Seifert matrix of T(2, 2g+1): upper bidiagonal with -1 on the diagonal.
SeifertMatrix torus_2(long genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = -1;
    if (i + 1 < n) a(i, i + 1) = 1;
  }
  return SeifertMatrix(a);
}

}  // namespace

static void BM_JumpFunctionTorus(benchmark::State& state) {
  const SeifertMatrix a = torus_2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jump_function(a));
}
BENCHMARK(BM_JumpFunctionTorus)->DenseRange(1, 6);

static void BM_JumpFunctionIrrational(benchmark::State& state) {
  // 2t - 3 + 2t^-1 has roots off the roots of unity.
  SeifertMatrix one(RationalMatrix{{1, 1}, {0, 2}});
  SeifertMatrix a = one;
  for (long i = 1; i < state.range(0); ++i) a = connected_sum(a, torus_2(1));
  for (auto _ : state) benchmark::DoNotOptimize(jump_function(a, 1, 256));
}
BENCHMARK(BM_JumpFunctionIrrational)->DenseRange(1, 4);

static void BM_SignatureAt(benchmark::State& state) {
  const SeifertMatrix a = torus_2(state.range(0));
  const Rational t = make_rational(1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(signature_at(a, t));
}
BENCHMARK(BM_SignatureAt)->DenseRange(1, 5);

static void BM_MinimalPeriod(benchmark::State& state) {
  LinkFamilySpec spec;
  spec.m = static_cast<unsigned long>(state.range(0));
  spec.J = torus_2(2);
  const JumpFunction f = covering_jump_function(spec);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_period(f));
}
BENCHMARK(BM_MinimalPeriod)->Arg(1)->Arg(5)->Arg(50)->Arg(500);
