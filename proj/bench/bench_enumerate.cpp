// Serial reference vs OpenMP path of the enumeration/verification kernels.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "edc/search.hpp"

namespace {

void bench_enumerate(benchmark::State& state, int threads) {
    edc::EnumerationFilter filter;
    filter.phi_max = 1;
    for (auto _ : state) {
        auto gs = edc::enumerate_graphs(7, filter, threads);
        benchmark::DoNotOptimize(gs);
    }
}

void bench_verify_t11(benchmark::State& state, int threads) {
    for (auto _ : state) {
        auto rep = edc::verify_theorem_1_1(7, 2, threads);
        benchmark::DoNotOptimize(rep);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bench_enumerate, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_enumerate, openmp, omp_get_max_threads())
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_verify_t11, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_verify_t11, openmp, omp_get_max_threads())
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
