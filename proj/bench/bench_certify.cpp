#include <benchmark/benchmark.h>

#include "cslkit/certify.hpp"

using namespace cslkit;

namespace {

void BM_certify_A(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(certify_A_batch(50, 200, exec));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_certify_C(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(certify_C(25, 35, exec));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_certify_A)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_C)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
