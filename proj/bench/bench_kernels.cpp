// Serial reference vs OpenMP kernels for the two data-parallel workloads:
// the property sweep and multi-restart search.
#include <benchmark/benchmark.h>

#include <omp.h>

#include "corrdet/explore.hpp"
#include "corrdet/sweep.hpp"

using namespace corrdet;

namespace {

void BM_Sweep(benchmark::State& state, Execution exec) {
  SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 8;
  cfg.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SweepSummary s = run_sweep(cfg, exec);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * 7 * state.range(0));
  state.counters["threads"] = exec == Execution::Serial ? 1 : omp_get_max_threads();
}

void BM_SearchInfinity(benchmark::State& state, Execution exec) {
  SearchConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  cfg.p = kInfExponent;
  cfg.budget = 1000;
  cfg.restarts = 16;
  for (auto _ : state) {
    SearchResult r = search_p_counterexample(cfg, exec);
    benchmark::DoNotOptimize(r.objective);
  }
  state.SetItemsProcessed(state.iterations() * 16 * 1000);
}

void BM_RandomCorrelation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_correlation(n, seed++));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sweep, serial, Execution::Serial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, openmp, Execution::Parallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SearchInfinity, serial, Execution::Serial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SearchInfinity, openmp, Execution::Parallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomCorrelation)->DenseRange(2, 8, 3);

BENCHMARK_MAIN();
