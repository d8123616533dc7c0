#include <benchmark/benchmark.h>

#include "modcard/gadgets.hpp"

using namespace modcard;

static void BM_BuildReduction(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SmcInstance smc = smc_from_clique(k, 2 * k, Rational(1, 2), 17);
  for (auto _ : state) benchmark::DoNotOptimize(build_reduction(smc, ReductionCase::Alpha1).factors.size());
}
BENCHMARK(BM_BuildReduction)->DenseRange(2, 6);

static void BM_CheckWitness(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SmcInstance smc = smc_from_clique(k, 2 * k, Rational(1, 2), 17);
  auto bp = build_reduction(smc, ReductionCase::Alpha0);
  auto w = witness_from_clique(bp, *find_multicolored_clique(smc));
  for (auto _ : state) benchmark::DoNotOptimize(check_witness(bp, w).ok);
}
BENCHMARK(BM_CheckWitness)->DenseRange(2, 6);

static void BM_SumfreeSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sumfree_set(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SumfreeSet)->RangeMultiplier(2)->Range(8, 256);
