#include <benchmark/benchmark.h>

#include "qtoda/engine.hpp"
#include "qtoda/limits.hpp"

using namespace qtoda;

static void BM_Quasiclassical(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const DiffOp a = build_toda_operator(N, 1, true);
    for (auto _ : state) benchmark::DoNotOptimize(quasiclassical_limit(a, N, 2));
}
BENCHMARK(BM_Quasiclassical)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_MacdonaldLimit(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(macdonald_toda_limit(N));
}
BENCHMARK(BM_MacdonaldLimit)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_RelativisticCheck(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(relativistic_gauge_check(N, true, ShiftConvention::minus));
}
BENCHMARK(BM_RelativisticCheck)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
