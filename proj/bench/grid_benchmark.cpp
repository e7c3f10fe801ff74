#include <benchmark/benchmark.h>

#include "hmlf/analysis.hpp"

namespace {

// Entire member with a few hundred terms per point near the ends of the range.
const hmlf::HmlfSpec kSpec{{1.0, 1.0}, {1.0}, 2.0, 1.0};

void BM_GridSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hmlf::sample_grid_serial(kSpec, -14.0, 0.9, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_GridParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hmlf::sample_grid(kSpec, -14.0, 0.9, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(400)->Arg(4000);
BENCHMARK(BM_GridParallel)->Arg(400)->Arg(4000);

BENCHMARK_MAIN();
