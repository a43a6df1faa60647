#include <benchmark/benchmark.h>

#include "planecount/coloring.hpp"
#include "planecount/enumerate.hpp"
#include "planecount/plane_graph.hpp"
#include "planecount/structure.hpp"

using namespace planecount;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

Graph grotzsch() {
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(10, 5 + i);
    }
    return g;
}

/// Chain of `blocks` triangles sharing cut vertices: 2-degenerate,
/// no cycles longer than 3.
Graph triangle_chain(int blocks) {
    Graph g(2 * blocks + 1);
    for (int b = 0; b < blocks; ++b) {
        int a = 2 * b;
        g.add_edge(a, a + 1);
        g.add_edge(a + 1, a + 2);
        g.add_edge(a, a + 2);
    }
    return g;
}

void BM_TraceFaces(benchmark::State& state) {
    // one genus-0 embedding of the octahedron (antiprism rotation)
    RotationSystem rs = RotationSystem::from_neighbor_lists({
        {1, 4, 5, 2},
        {2, 3, 4, 0},
        {0, 5, 3, 1},
        {1, 2, 5, 4},
        {0, 1, 3, 5},
        {4, 3, 2, 0},
    });
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_faces(rs));
}
BENCHMARK(BM_TraceFaces);

void BM_ExactColorInfeasible(benchmark::State& state) {
    Graph g = grotzsch();
    for (auto _ : state) {
        auto result = exact_k_color(g, 3);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ExactColorInfeasible);

void BM_CanonicalForm(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_graph6(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_PeelAndGreedy(benchmark::State& state) {
    Graph g = triangle_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PeelTrace t = peel_order(g);
        benchmark::DoNotOptimize(greedy_color_from_peel(g, t));
    }
}
BENCHMARK(BM_PeelAndGreedy)->Arg(4)->Arg(16)->Arg(64);

void BM_EnumerateConnected(benchmark::State& state) {
    CorpusFilter filter;
    filter.max_n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_small_graphs(filter));
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6);

void BM_CycleScan(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(forbidden_cycle_scan(g, 4, 11));
}
BENCHMARK(BM_CycleScan);

void BM_EmbeddingSweep(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) {
        long long genus_zero = 0;
        enumerate_embeddings(g, true, [&](const RotationSystem&) {
            ++genus_zero;
            return true;
        });
        benchmark::DoNotOptimize(genus_zero);
    }
}
BENCHMARK(BM_EmbeddingSweep);

}  // namespace

BENCHMARK_MAIN();
