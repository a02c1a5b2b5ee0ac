// Parallel sweep against the serial reference on square grids of rank-1
// bundles, all checks enabled.

#include <benchmark/benchmark.h>

#include <vector>

#include "eqcut/verifier.hpp"

namespace {

using namespace eqcut;

std::vector<EquivBundleCP1> grid(std::int64_t radius) { return GridSpec{-radius, radius, -radius, radius}.points(); }

const std::vector<CheckId> kChecks(kAllChecks.begin(), kAllChecks.end());

void BM_SweepSerial(benchmark::State& state) {
  const auto points = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(points, kChecks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto points = grid(state.range(0));
  const SweepOptions options{static_cast<int>(state.range(1)), false};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(points, kChecks, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{10, 30}, {1, 2, 4, 8}})
    ->ArgNames({"radius", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
