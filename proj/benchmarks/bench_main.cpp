#include "pinturan/auxiliary.hpp"
#include "pinturan/bounds.hpp"
#include "pinturan/construct.hpp"
#include "pinturan/mis.hpp"
#include "pinturan/oracle.hpp"
#include "pinturan/random_models.hpp"

#include <benchmark/benchmark.h>

using namespace pinturan;

namespace {

Graph process_graph(std::size_t n, double d, std::uint64_t seed) {
    auto rng = make_stream(seed, n);
    return triangle_free_process(n, edges_for_average_degree(n, d), rng).graph;
}

void BM_TriangleFreeProcess(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto rng = make_stream(1, seed++);
        benchmark::DoNotOptimize(triangle_free_process(n, std::nullopt, rng).steps);
    }
}
BENCHMARK(BM_TriangleFreeProcess)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_MaxIndependentSet(benchmark::State& state) {
    const auto g = process_graph(static_cast<std::size_t>(state.range(0)), static_cast<double>(state.range(1)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g, 200'000).size);
}
BENCHMARK(BM_MaxIndependentSet)->Args({64, 4})->Args({128, 4})->Args({128, 8})->Args({256, 4})->Unit(benchmark::kMillisecond);

void BM_ExactOracleStar(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = star_graph(n / 2 + 1, n);
    for (auto _ : state) benchmark::DoNotOptimize(exact_ex(p).value);
}
BENCHMARK(BM_ExactOracleStar)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_ExactOracleCycle(benchmark::State& state) {
    const auto p = embed(cycle_graph(5), static_cast<std::size_t>(state.range(0)));
    const OracleOptions opts{kDefaultOracleBudget, state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(exact_ex(p, opts).value);
}
BENCHMARK(BM_ExactOracleCycle)->Args({8, 1})->Args({10, 1})->Args({8, 0})->Unit(benchmark::kMicrosecond);

void BM_ConstructExact(benchmark::State& state) {
    const auto p = process_graph(static_cast<std::size_t>(state.range(0)), 1.0, 5);
    for (auto _ : state) {
        Rng rng(7);
        benchmark::DoNotOptimize(construct_admissible(p, {}, rng).i_size);
    }
}
BENCHMARK(BM_ConstructExact)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AuxSlice(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = process_graph(n, 2.0, 9);
    const auto s = complete_bipartite(n, identity_split(n));
    for (auto _ : state) benchmark::DoNotOptimize(build_aux_slice(p, s).b2.edge_count());
}
BENCHMARK(BM_AuxSlice)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ComputeBounds(benchmark::State& state) {
    const auto g = process_graph(static_cast<std::size_t>(state.range(0)), 4.0, 11);
    for (auto _ : state) benchmark::DoNotOptimize(compute_bounds(g, 200'000).upper_bound.num);
}
BENCHMARK(BM_ComputeBounds)->Arg(128)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
