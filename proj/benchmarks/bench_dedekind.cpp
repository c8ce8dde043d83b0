#include <cosmetry/dedekind.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using cosmetry::dedekind;
using cosmetry::dedekind_direct;
using cosmetry::Int;

static void DedekindDirect(benchmark::State& state) {
    const long b = state.range(0);
    const long a = b / 2 | 1;  // odd, usually coprime; skip if not
    if (std::gcd(a, b) != 1) {
        state.SkipWithError("pick a different modulus");
        return;
    }
    for (auto _ : state) {
        auto v = dedekind_direct(a, b);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(b);
}
BENCHMARK(DedekindDirect)->RangeMultiplier(4)->Range(1 << 8, 1 << 20)->Complexity();

static void DedekindReciprocity(benchmark::State& state) {
    const long b = state.range(0);
    const long a = b / 2 | 1;
    if (std::gcd(a, b) != 1) {
        state.SkipWithError("pick a different modulus");
        return;
    }
    for (auto _ : state) {
        auto v = dedekind(a, b);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(b);
}
BENCHMARK(DedekindReciprocity)->RangeMultiplier(4)->Range(1 << 8, 1 << 20)->Complexity();

// Arbitrary-precision walk, far beyond the word-size cutoff.
static void DedekindReciprocityBig(benchmark::State& state) {
    Int b("170141183460469231731687303715884105727");  // 2^127 - 1
    Int a = (b - 1) / 2;
    for (auto _ : state) {
        auto v = dedekind(a, b);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(DedekindReciprocityBig);

BENCHMARK_MAIN();
