#include <benchmark/benchmark.h>

#include "findex/canonical.hpp"
#include "findex/enumeration.hpp"
#include "findex/partition.hpp"
#include "findex/realizability.hpp"

using namespace findex;

static void BM_EnumerateDeltaExact(benchmark::State& state) {
    EnumSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.delta_exact = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_bicyclic(spec).max_f);
    }
}
BENCHMARK(BM_EnumerateDeltaExact)->Args({7, 4})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_EnumerateAll(benchmark::State& state) {
    EnumSpec spec;
    spec.n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_bicyclic(spec).count);
    }
}
BENCHMARK(BM_EnumerateAll)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateDedup(benchmark::State& state) {
    EnumSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.dedup = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_bicyclic(spec).count);
    }
}
BENCHMARK(BM_EnumerateDedup)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ExactHistogramMax(benchmark::State& state) {
    const auto params = residue_params(state.range(0), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_histogram_max(params).value);
    }
}
BENCHMARK(BM_ExactHistogramMax)->Args({60, 10})->Args({200, 10})->Args({1000, 30});

static void BM_CanonicalMask(benchmark::State& state) {
    // Two triangles joined through a path: several non-trivial colour classes.
    const Graph g(9, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}, {7, 8}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_mask(g));
    }
}
BENCHMARK(BM_CanonicalMask);

static void BM_ErdosGallai(benchmark::State& state) {
    const std::vector<int> seq{4, 4, 4, 3, 1, 1, 1, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(erdos_gallai(seq));
    }
}
BENCHMARK(BM_ErdosGallai);
BENCHMARK_MAIN();
