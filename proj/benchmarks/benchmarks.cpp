#include "weylcount/identities.hpp"
#include "weylcount/objects.hpp"
#include "weylcount/series.hpp"
#include "weylcount/walks.hpp"

#include <benchmark/benchmark.h>

using namespace weylcount;

static void BM_SeriesDeterminant(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_walk_gf(d, 16));
    }
}
BENCHMARK(BM_SeriesDeterminant)->DenseRange(2, 6);

static void BM_SeriesExp(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bsm_egf(order));
    }
}
BENCHMARK(BM_SeriesExp)->Arg(16)->Arg(64)->Arg(256);

static void BM_OscillatingWalkTotal(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const WeylPoint start = WeylPoint::staircase(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_oscillating_walk_count(start, 16));
    }
}
BENCHMARK(BM_OscillatingWalkTotal)->DenseRange(1, 4);

static void BM_BallotDeterminant(benchmark::State& state) {
    const WeylPoint from = WeylPoint::staircase(4);
    const WeylPoint to({12, 9, 5, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ballot_walk_count_det(from, to));
    }
}
BENCHMARK(BM_BallotDeterminant);

static void BM_EnumerateMatchings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt count = 0;
        for_each_matching(n, [&](const Matching& m) { count += crossing_number(m); });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateMatchings)->DenseRange(4, 7);

static void BM_GesselCount(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gessel_count(d, 12));
    }
}
BENCHMARK(BM_GesselCount)->DenseRange(2, 5);

BENCHMARK_MAIN();
