#include <benchmark/benchmark.h>

#include "edgering/fixtures.hpp"
#include "edgering/nccr.hpp"
#include "edgering/poset.hpp"

using namespace edgering;

static void BM_ReplayK222(benchmark::State& state) {
  const NCCRInstance inst = load_instance("k222");
  const BetaSystem beta = beta_system(inst.spec, inst.convention);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_schedule(inst.initial, inst.target, beta, inst.schedule, inst.assumptions));
  }
}
BENCHMARK(BM_ReplayK222)->Unit(benchmark::kMillisecond);

static void BM_AutoSearchK222(benchmark::State& state) {
  const NCCRInstance inst = load_instance("k222");
  const BetaSystem beta = beta_system(inst.spec, inst.convention);
  for (auto _ : state) benchmark::DoNotOptimize(run_auto_search(inst.initial, inst.target, beta, 2));
}
BENCHMARK(BM_AutoSearchK222)->Unit(benchmark::kMillisecond);

static void BM_HibiBipartite(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hibi_reduction(m, m, HibiVariant::Bipartite));
}
BENCHMARK(BM_HibiBipartite)->DenseRange(1, 3);
