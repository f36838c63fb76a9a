#include <benchmark/benchmark.h>

#include "edgering/conic.hpp"

using namespace edgering;

static void BM_ConicLatticePoints(benchmark::State& state) {
  const PartitionSpec spec(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(conic_lattice_points(spec));
}
BENCHMARK(BM_ConicLatticePoints)->DenseRange(3, 5);

static void BM_VerifyEquivalence(benchmark::State& state) {
  const PartitionSpec spec(state.range(0) == 3 ? std::vector<int>{2, 2, 2} : std::vector<int>{1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(verify_equivalence(spec, 1));
}
BENCHMARK(BM_VerifyEquivalence)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
