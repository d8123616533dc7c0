#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "modcard/tables.hpp"

using namespace modcard;

static void BM_ClusterDeletionTable(benchmark::State& state) {
  Graph g = bench::clusters(static_cast<int>(state.range(0)), 8, 11);
  for (auto _ : state) benchmark::DoNotOptimize(deletion_table(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClusterDeletionTable)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_StarsDeletionTable(benchmark::State& state) {
  Graph g = bench::stars(static_cast<int>(state.range(0)), 12, 5);
  for (auto _ : state) benchmark::DoNotOptimize(stars_deletion_table(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StarsDeletionTable)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_BruteForceDeletionTable(benchmark::State& state) {
  Graph g = bench::gnp(static_cast<int>(state.range(0)), 0.4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(deletion_table_bruteforce(g));
}
BENCHMARK(BM_BruteForceDeletionTable)->DenseRange(8, 16, 4);
