#include <benchmark/benchmark.h>

#include "conclab/conclab.hpp"

using namespace conclab;

namespace {

LinkFamilySpec trefoil_link(unsigned long m) {
  LinkFamilySpec s;
  s.m = m;
  s.J = parse_knot("trefoil");
  return s;
}

}  // namespace

static void BM_ObstructTopological(benchmark::State& state) {
  const auto spec = trefoil_link(static_cast<unsigned long>(state.range(0)));
  const PolySet d = PolySet::unit();
  for (auto _ : state) benchmark::DoNotOptimize(obstruct_topological(spec, 2, d));
}
BENCHMARK(BM_ObstructTopological)->Arg(1)->Arg(5)->Arg(50);

static void BM_ObstructSmoothExternal(benchmark::State& state) {
  const auto spec = trefoil_link(1);
  const DTable table{FiniteAbelianGroup::cyclic(9),
                     {{{0}, Rational(0)}, {{3}, Rational(2)}, {{6}, Rational(2)}},
                     "benchmark"};
  for (auto _ : state) benchmark::DoNotOptimize(obstruct_smooth(spec, PolySet::unit(), table));
}
BENCHMARK(BM_ObstructSmoothExternal);

static void BM_ObstructSmoothComputed(benchmark::State& state) {
  LinkFamilySpec spec;
  spec.m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(obstruct_smooth(spec, PolySet::unit(), std::nullopt));
}
BENCHMARK(BM_ObstructSmoothComputed)->Arg(1)->Arg(3)->Arg(6);
