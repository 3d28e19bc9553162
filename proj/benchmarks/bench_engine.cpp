#include <benchmark/benchmark.h>

#include "qtoda/engine.hpp"

using namespace qtoda;

static void BM_Build(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const bool affine = state.range(1) != 0;
    for (auto _ : state)
        for (int k = 1; k < N; ++k) benchmark::DoNotOptimize(build_toda_operator(N, k, affine));
}
BENCHMARK(BM_Build)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_WordExpansion(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const auto rep = fundamental_rep(N, N / 2, true);
    const auto cfg = EngineConfig::standard(N, true);
    for (auto _ : state) benchmark::DoNotOptimize(expand_central_words(rep, cfg));
}
BENCHMARK(BM_WordExpansion)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_Compose(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const DiffOp a = build_toda_operator(N, 1, true);
    const DiffOp b = build_toda_operator(N, N / 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Commutator(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const DiffOp a = build_toda_operator(N, 1, true);
    const DiffOp b = build_toda_operator(N, 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_Commutator)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
