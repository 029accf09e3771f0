#include <benchmark/benchmark.h>

#include "tqmean/inequality_registry.hpp"
#include "tqmean/means.hpp"
#include "tqmean/sharp_constants.hpp"
#include "tqmean/special_functions.hpp"

using namespace tqmean;

static void BM_I0Series(benchmark::State& state)
{
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(i0_series(t));
    }
}
BENCHMARK(BM_I0Series)->Arg(1)->Arg(10)->Arg(30);

static void BM_I0Quadrature(benchmark::State& state)
{
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(i0_quadrature(t));
    }
}
BENCHMARK(BM_I0Quadrature)->Arg(1)->Arg(10)->Arg(30);

static void BM_I0Scaled(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(i0_scaled(500.0));
    }
}
BENCHMARK(BM_I0Scaled);

static void BM_Means(benchmark::State& state)
{
    const MeanKind kinds[] = {MeanKind::logarithmic(), MeanKind::identric(), MeanKind::agm(), MeanKind::toader(),
                              MeanKind::toader_qi()};
    const MeanKind kind = kinds[state.range(0)];
    const PositivePair pair(1.0, 7.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(kind, pair));
    }
    state.SetLabel(kind.name());
}
BENCHMARK(BM_Means)->DenseRange(0, 4);

static void BM_TqBothPaths(benchmark::State& state)
{
    const PositivePair pair(1.0, 1e6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tq_mean_paths(pair));
    }
}
BENCHMARK(BM_TqBothPaths);

static void BM_RatioR1(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(ratio_eval(RatioFunction::r1(), 2.7));
    }
}
BENCHMARK(BM_RatioR1);

static void BM_FindT0(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_t0_delta0());
    }
}
BENCHMARK(BM_FindT0)->Unit(benchmark::kMillisecond);

static void BM_VSequence(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(v_sequence(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_VSequence)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_VerifyCase(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_case("G-TQ-A", 1000, 42));
    }
}
BENCHMARK(BM_VerifyCase)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
