#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "modcard/graph_classes.hpp"
#include "modcard/solvers.hpp"

using namespace modcard;

static void BM_BddCluster(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = bench::join(bench::clusters(n / 2, 5, 21), bench::clusters(n - n / 2, 5, 22));
  GraphClass cls(ClassTag::Cluster);
  const long long beta = -(n / 2 + 2);
  long long q = n / 2;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bdd_gmc(g, q, beta, cls).feasible());
  state.SetComplexityN(n);
}
BENCHMARK(BM_BddCluster)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_LddNeighborhoodDiversity(benchmark::State& state) {
  LddInstance inst;
  inst.graph = bench::blow_up(bench::gnp(5, 0.5, 4), static_cast<int>(state.range(0)));
  inst.alpha = Rational(1, 2);
  inst.beta = 0;
  inst.q = inst.graph.n() / 3;
  for (auto _ : state) benchmark::DoNotOptimize(solve_ldd_nd(inst).feasible());
  state.counters["n"] = inst.graph.n();
}
BENCHMARK(BM_LddNeighborhoodDiversity)->RangeMultiplier(2)->Range(2, 32);
