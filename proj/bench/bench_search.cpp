// Serial reference kernels against the pruned OpenMP kernels.
//   ./bench_search --benchmark_filter=Triples

#include <benchmark/benchmark.h>

#include "abcq/search.hpp"

using namespace abcq;

static void BM_TriplesSerial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_triples_serial(n, 1.0));
    state.counters["max_c"] = static_cast<double>(n);
}
BENCHMARK(BM_TriplesSerial)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_TriplesParallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(search_triples(n, 1.0, opts));
    state.counters["max_c"] = static_cast<double>(n);
    state.counters["threads"] = opts.threads;
}
BENCHMARK(BM_TriplesParallel)
    ->ArgsProduct({{2000, 10000, 1000000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_QuadruplesSerial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_quadruples_serial(n, 1.0, Coprimality::overall));
}
BENCHMARK(BM_QuadruplesSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_QuadruplesParallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(search_quadruples(n, 1.0, Coprimality::overall, opts));
}
BENCHMARK(BM_QuadruplesParallel)->ArgsProduct({{30, 60}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_RadicalSieve(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_radical_sieve(n));
}
BENCHMARK(BM_RadicalSieve)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
