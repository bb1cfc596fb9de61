#include <benchmark/benchmark.h>

#include "omega/lattice.hpp"

namespace {

void BM_BuildCompRel(benchmark::State& state) {
  for (auto _ : state) {
    auto rel = omega::build_comp_rel();
    benchmark::DoNotOptimize(rel.entries().size());
  }
}
BENCHMARK(BM_BuildCompRel);

void BM_EnumerateInterval(benchmark::State& state) {
  auto rel = omega::build_comp_rel();
  for (auto _ : state) {
    auto sets = omega::enumerate_interval(rel);
    benchmark::DoNotOptimize(sets.size());
  }
}
BENCHMARK(BM_EnumerateInterval);

void BM_Hasse(benchmark::State& state) {
  auto rel = omega::build_comp_rel();
  auto sets = omega::enumerate_interval(rel);
  for (auto _ : state) {
    auto edges = omega::hasse(sets);
    benchmark::DoNotOptimize(edges.size());
  }
}
BENCHMARK(BM_Hasse);

}  // namespace

BENCHMARK_MAIN();
