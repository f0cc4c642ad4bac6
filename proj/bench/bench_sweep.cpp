// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "fibtower/sweep.hpp"
#include "fibtower/verify.hpp"

using namespace fibtower;

namespace {

const SweepGrid kGrid{{1, 6}, {1, 25}, {1, 3}};

void BM_SweepSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(kGrid));
}

void BM_SweepParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(kGrid, jobs));
}

void BM_PisanoTable(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_pisano_suite(20'000, jobs));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PisanoTable)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
