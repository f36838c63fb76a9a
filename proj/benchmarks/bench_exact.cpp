#include <benchmark/benchmark.h>

#include <random>

#include "edgering/class_group.hpp"
#include "edgering/smith.hpp"

using namespace edgering;

static void BM_SmithRandomSquare(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntegerMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) m(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandomSquare)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_ClassGroup(benchmark::State& state) {
  const PartitionSpec spec(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(class_group(spec));
}
BENCHMARK(BM_ClassGroup)->DenseRange(3, 6);
