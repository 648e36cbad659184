// Parallel kernels against their serial reference twins. The graphs come
// from the bundled generator so the shapes match real runs.

#include <benchmark/benchmark.h>

#include <vector>

#include "kct/dist.hpp"
#include "kct/io.hpp"
#include "kct/solver.hpp"

using namespace kct;

namespace {

const RoadGraph& gen_graph(int n) {
    static std::vector<std::pair<int, RoadGraph>> cache;
    for (const auto& [key, g] : cache)
        if (key == n) return g;
    GenConfig cfg;
    cfg.n = n;
    cfg.seed = 99;
    cache.emplace_back(n, gen_random_graph(cfg).graph);
    return cache.back().second;
}

const DistanceMatrix& gen_matrix(int n) {
    static std::vector<std::pair<int, DistanceMatrix>> cache;
    for (const auto& [key, dm] : cache)
        if (key == n) return dm;
    cache.emplace_back(n, all_pairs(gen_graph(n)));
    return cache.back().second;
}

void bm_all_pairs(benchmark::State& state) {
    const RoadGraph& g = gen_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs(g));
}

void bm_all_pairs_serial(benchmark::State& state) {
    const RoadGraph& g = gen_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_serial(g));
}

void bm_local_search(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RoadGraph& g = gen_graph(n);
    const DistanceMatrix& dm = gen_matrix(n);
    const auto seeds = greedy_farthest_first(dm, 8, 0);
    for (auto _ : state) benchmark::DoNotOptimize(local_search(g, dm, seeds, 5));
}

void bm_local_search_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RoadGraph& g = gen_graph(n);
    const DistanceMatrix& dm = gen_matrix(n);
    const auto seeds = greedy_farthest_first(dm, 8, 0);
    for (auto _ : state) benchmark::DoNotOptimize(local_search_serial(g, dm, seeds, 5));
}

void bm_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RoadGraph& g = gen_graph(n);
    const DistanceMatrix& dm = gen_matrix(n);
    for (auto _ : state) benchmark::DoNotOptimize(exact_solver(g, dm, 3));
}

void bm_exact_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RoadGraph& g = gen_graph(n);
    const DistanceMatrix& dm = gen_matrix(n);
    for (auto _ : state) benchmark::DoNotOptimize(exact_solver_serial(g, dm, 3));
}

BENCHMARK(bm_all_pairs)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_all_pairs_serial)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_local_search)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_local_search_serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_exact)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_exact_serial)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
