// Throughput comparison between the OpenMP sample loops and the serial
// reference drivers on the two headline checks.

#include <benchmark/benchmark.h>

#include "osslab/checkers.hpp"
#include "osslab/fourdim.hpp"

namespace {

osslab::SampleConfig config(int count) {
  osslab::SampleConfig cfg;
  cfg.count = count;
  cfg.includeStructured = false;
  return cfg;
}

void BM_osserman_parallel(benchmark::State& state) {
  const auto r = osslab::canonical_osserman(1.0, 2.0, 3.0);
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = osslab::osserman_check_sampled(r, cfg);
    benchmark::DoNotOptimize(rep.maxResidual);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_osserman_serial(benchmark::State& state) {
  const auto r = osslab::canonical_osserman(1.0, 2.0, 3.0);
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = osslab::serial::osserman_check_sampled(r, cfg);
    benchmark::DoNotOptimize(rep.maxResidual);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_duality_parallel(benchmark::State& state) {
  const auto r = osslab::canonical_osserman(1.0, 2.0, 3.0);
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = osslab::rakic_duality_check(r, cfg);
    benchmark::DoNotOptimize(rep.maxResidual);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_duality_serial(benchmark::State& state) {
  const auto r = osslab::canonical_osserman(1.0, 2.0, 3.0);
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = osslab::serial::rakic_duality_check(r, cfg);
    benchmark::DoNotOptimize(rep.maxResidual);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_osserman_serial)->Arg(512)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_osserman_parallel)->Arg(512)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_duality_serial)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_duality_parallel)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
