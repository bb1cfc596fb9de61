#include <benchmark/benchmark.h>

#include "omega/catalog.hpp"

namespace {

void BM_WindowReportCproj(benchmark::State& state) {
  const auto& f = omega::witness("cproj");
  for (auto _ : state) {
    auto rep = omega::window_report(f, state.range(0), 10 * state.range(0), 3);
    benchmark::DoNotOptimize(rep.k_obs);
  }
}
BENCHMARK(BM_WindowReportCproj)->Arg(100)->Arg(400)->Arg(1600);

void BM_ConsistencyCatalog(benchmark::State& state) {
  const auto& all = omega::mandatory_witnesses();
  for (auto _ : state) {
    for (const auto& t : all) {
      auto rep = omega::consistency_check(t);
      benchmark::DoNotOptimize(rep.passed);
    }
  }
}
BENCHMARK(BM_ConsistencyCatalog);

}  // namespace

BENCHMARK_MAIN();
