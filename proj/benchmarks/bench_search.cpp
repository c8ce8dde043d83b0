#include <cosmetry/alexander.hpp>
#include <cosmetry/casson_walker.hpp>
#include <cosmetry/search.hpp>

#include <benchmark/benchmark.h>

using namespace cosmetry;

static void PairTest(benchmark::State& state) {
    const long m = 9 * 27 * 25 + 2;  // large odd modulus
    for (auto _ : state) {
        bool v = cw_pair_test(1, m, 4, 3);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(PairTest);

static void EnumerateCandidates(benchmark::State& state) {
    KnotExpr trefoil = KnotExpr::torus(2, 3);
    const long m_max = state.range(0);
    for (auto _ : state) {
        auto v = enumerate_candidates(trefoil, m_max, 16, static_cast<unsigned>(state.range(1)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(EnumerateCandidates)->Args({200, 1})->Args({200, 2})->Args({800, 1})->Args({800, 2});

static void AlexanderCable(benchmark::State& state) {
    KnotExpr knot = KnotExpr::cable(13, 2, KnotExpr::cable(7, 3, KnotExpr::torus(5, 2)));
    for (auto _ : state) {
        auto v = alexander_of(knot);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(AlexanderCable);

BENCHMARK_MAIN();
