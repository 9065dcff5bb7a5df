#include "eideal/cm_recognition.hpp"
#include "eideal/exact_rank.hpp"
#include "eideal/homology.hpp"
#include "eideal/invariants.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace eideal;

static void BM_OraclePath(benchmark::State& state) {
    const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_values(g));
}
BENCHMARK(BM_OraclePath)->DenseRange(6, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_OracleCM(benchmark::State& state) {
    const Graph g = random_cm_graph(static_cast<std::size_t>(state.range(0)), 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_values(g));
}
BENCHMARK(BM_OracleCM)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_OracleNoConeSkip(benchmark::State& state) {
    const Graph g = random_cm_graph(static_cast<std::size_t>(state.range(0)), 0.4, 7);
    OracleOptions opts;
    opts.skip_cones = false;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_values(g, opts));
}
BENCHMARK(BM_OracleNoConeSkip)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_RecognizeCM(benchmark::State& state) {
    const Graph g = random_cm_graph(static_cast<std::size_t>(state.range(0)), 0.3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_cm(g));
}
BENCHMARK(BM_RecognizeCM)->RangeMultiplier(2)->Range(2, 12);

static void BM_InvariantReport(benchmark::State& state) {
    const Graph g = random_cm_graph(static_cast<std::size_t>(state.range(0)), 0.3, 13);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_report(g));
}
BENCHMARK(BM_InvariantReport)->DenseRange(4, 12, 4);

static SparseIntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SparseIntMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::uint32_t r = 0; r < n; ++r)
            if (rng() % 4 == 0) m.push(c, r, static_cast<std::int64_t>(rng() % 3) - 1);
    return m;
}

static void BM_RankInt64(benchmark::State& state) {
    const SparseIntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m));
}
BENCHMARK(BM_RankInt64)->RangeMultiplier(2)->Range(16, 128);

static void BM_RankBareiss(benchmark::State& state) {
    const SparseIntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m));
}
BENCHMARK(BM_RankBareiss)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK_MAIN();
