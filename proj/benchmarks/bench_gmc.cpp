#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "modcard/gmc.hpp"
#include "modcard/graph_classes.hpp"
#include "modcard/modular_decomposition.hpp"

using namespace modcard;

static void BM_MdTree(benchmark::State& state) {
  Graph g = bench::gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(md_tree(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MdTree)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_ClusterGmc(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = bench::join(bench::clusters(n / 2, 6, 1), bench::clusters(n - n / 2, 6, 2));
  GraphClass cls(ClassTag::Cluster);
  for (auto _ : state) benchmark::DoNotOptimize(compute_gmc(cls, g).cardinality);
  state.SetComplexityN(n);
}
BENCHMARK(BM_ClusterGmc)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_NeighborhoodDiversity(benchmark::State& state) {
  Graph g = bench::blow_up(bench::gnp(8, 0.5, 3), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_diversity(g).cardinality);
  state.counters["n"] = g.n();
}
BENCHMARK(BM_NeighborhoodDiversity)->RangeMultiplier(2)->Range(2, 32);
