#include <benchmark/benchmark.h>

#include <random>

#include "wiener/wiener.hpp"

namespace {

using namespace wiener;

Tree make_tree(std::int64_t n) {
    std::mt19937_64 rng(987654321);
    return random_tree(n, rng);
}

void BM_WienerPairwise(benchmark::State& state) {
    Tree t = make_tree(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wiener_pairwise(t));
}
BENCHMARK(BM_WienerPairwise)->Arg(128)->Arg(512)->Arg(2048);

void BM_WienerEdgecut(benchmark::State& state) {
    Tree t = make_tree(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wiener_edgecut(t));
}
BENCHMARK(BM_WienerEdgecut)->Arg(128)->Arg(512)->Arg(2048);

void BM_FValue(benchmark::State& state) {
    std::mt19937_64 rng(13579);
    std::vector<std::int64_t> y(static_cast<std::size_t>(state.range(0)));
    for (auto& v : y) v = 1 + static_cast<std::int64_t>(rng() % 20);
    for (auto _ : state) benchmark::DoNotOptimize(f_value(y));
}
BENCHMARK(BM_FValue)->Arg(1000)->Arg(100000);

void BM_BruteForceMax(benchmark::State& state) {
    const auto k = state.range(0);
    std::vector<std::int64_t> w;
    for (std::int64_t i = 0; i < k; ++i) w.push_back(1 + i % 4);
    WeightMultiset ws(w);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_max(ws, k).f_star);
}
BENCHMARK(BM_BruteForceMax)->Arg(7)->Arg(8)->Arg(9);

void BM_ValleyMax(benchmark::State& state) {
    const auto k = state.range(0);
    std::vector<std::int64_t> w;
    for (std::int64_t i = 0; i < k; ++i) w.push_back(i + 1); // all distinct
    WeightMultiset ws(w);
    for (auto _ : state) benchmark::DoNotOptimize(valley_max(ws).f_star);
}
BENCHMARK(BM_ValleyMax)->Arg(12)->Arg(16)->Arg(20);

void BM_SpectralRadius(benchmark::State& state) {
    const auto k = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(path_distance_spectral_radius(k));
}
BENCHMARK(BM_SpectralRadius)->Arg(100)->Arg(1000)->Arg(10000);

void BM_AuditSweep(benchmark::State& state) {
    for (auto _ : state) {
        AuditReport r = audit_sweep({2, 3, 4, 5}, 3);
        benchmark::DoNotOptimize(r.instance_count);
    }
}
BENCHMARK(BM_AuditSweep);

} // namespace

BENCHMARK_MAIN();
