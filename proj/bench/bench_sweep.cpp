// h-grid sweep: serial reference loop against the OpenMP version.

#include "frolicher/adiabatic.hpp"
#include "frolicher/catalog.hpp"

#include <benchmark/benchmark.h>

using namespace frolicher;

namespace {

const MetricOperators &model(int which) {
    static const MetricOperators iwasawa =
        build_operators(orthonormalize(catalog_entry("iwasawa"), HermitianMetric::random(3, 1)));
    static const MetricOperators three_step =
        build_operators(orthonormalize(catalog_entry("three_step"), HermitianMetric::random(3, 1)));
    return which == 0 ? iwasawa : three_step;
}

void BM_SweepSerial(benchmark::State &state) {
    const MetricOperators &ops = model(int(state.range(0)));
    std::vector<double> grid = geometric_grid(int(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(ops, grid));
}

void BM_SweepParallel(benchmark::State &state) {
    const MetricOperators &ops = model(int(state.range(0)));
    std::vector<double> grid = geometric_grid(int(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(ops, grid));
}

}  // namespace

// args: model (0 = iwasawa, 1 = three_step), j_max
BENCHMARK(BM_SweepSerial)->Args({0, 10})->Args({1, 10})->Args({1, 30})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({0, 10})->Args({1, 10})->Args({1, 30})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
