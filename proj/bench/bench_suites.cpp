#include <benchmark/benchmark.h>

#include <string>

#include "arthur/suite.hpp"

namespace {

const char* const kNames[] = {"endoscopic_sign", "mw_two_definitions", "dual_sign_identity", "generic_dual"};

void run(benchmark::State& state, arthur::Execution ex) {
  const arthur::Suite& suite = arthur::find_suite(kNames[state.range(0)]);
  arthur::SuiteConfig cfg;
  cfg.count = static_cast<int>(state.range(1));
  state.SetLabel(suite.name);
  for (auto _ : state) {
    arthur::SuiteResult r = arthur::run_suite(suite, cfg, ex);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * cfg.count);
}

void bm_serial(benchmark::State& state) { run(state, arthur::Execution::serial); }
void bm_parallel(benchmark::State& state) { run(state, arthur::Execution::parallel); }

void args(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < 4; ++i) b->Args({i, 2000});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(bm_serial)->Apply(args);
BENCHMARK(bm_parallel)->Apply(args);

BENCHMARK_MAIN();
