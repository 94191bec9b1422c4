#include <benchmark/benchmark.h>

#include <random>

#include "ordered_ramsey/block_coloring.hpp"
#include "ordered_ramsey/matrix_patterns.hpp"
#include "ordered_ramsey/ramsey_engine.hpp"

using namespace ordered_ramsey;

namespace {

OrderedGraph dense_host(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() % 3) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

ZeroOneMatrix witness_3x3() {
    ZeroOneMatrix a(3, 3);
    a.set(0, 1);
    a.set(1, 0);
    a.set(2, 0);
    a.set(2, 2);
    return a;
}

void BM_containment(benchmark::State& state) {
    OrderedGraph host = dense_host(static_cast<int>(state.range(0)), 7);
    OrderedGraph pattern = alternating_path(6);
    for (auto _ : state) benchmark::DoNotOptimize(contains(host, pattern));
}
BENCHMARK(BM_containment)->Arg(16)->Arg(32)->Arg(48);

void BM_free_search_found(benchmark::State& state) {
    OrderedGraph g = nested_pair(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(exists_free_coloring(7, 2, g));
}
BENCHMARK(BM_free_search_found);

void BM_free_search_exhausted(benchmark::State& state) {
    OrderedGraph g = nested_pair(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(exists_free_coloring(8, 2, g));
}
BENCHMARK(BM_free_search_exhausted);

void BM_ramsey_exact_crossing(benchmark::State& state) {
    OrderedGraph g = crossing_pair(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ramsey_exact(g, 2));
}
BENCHMARK(BM_ramsey_exact_crossing);

void BM_extremal_window(benchmark::State& state) {
    ZeroOneMatrix a = witness_3x3();
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extremal_number(a, m, m));
}
BENCHMARK(BM_extremal_window)->Arg(4)->Arg(5);

void BM_triangular_search_none(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_triangular_search(6, {2}, false));
}
BENCHMARK(BM_triangular_search_none);

void BM_derive_path_core(benchmark::State& state) {
    ZeroOneMatrix core = core_matrix(alternating_path(6));
    for (auto _ : state) benchmark::DoNotOptimize(derive_minimalist(core));
}
BENCHMARK(BM_derive_path_core);

void BM_pattern_scan(benchmark::State& state) {
    BlockColoring b = tcolor_grid(TColorVariant::G3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(pattern_report(b, true));
}
BENCHMARK(BM_pattern_scan);

}  // namespace

BENCHMARK_MAIN();
