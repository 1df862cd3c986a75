#include <benchmark/benchmark.h>

#include "algnum/complexexp.hpp"
#include "algnum/digitarith.hpp"
#include "algnum/finiteness.hpp"
#include "algnum/language.hpp"
#include "algnum/numsys.hpp"
#include "algnum/tiles.hpp"

using namespace algnum;

namespace {

NumberSystem make_base() {
    return NumberSystem::make(
        GaussRat(make_rat(Int(-1), Int(2)), make_rat(Int(3), Int(2))));
}

void BM_IntegerExpansion(benchmark::State& state) {
    NumberSystem ns = make_base();
    long r = state.range(0);
    for (auto _ : state) {
        for (long l = -r; l <= r; ++l) {
            for (long m = -r; m <= r; ++m) {
                auto e = integer_expansion(ns, LatticePoint(Int(l), Int(m)));
                benchmark::DoNotOptimize(e);
            }
        }
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntegerExpansion)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_DigitMultiply(benchmark::State& state) {
    NumberSystem ns = make_base();
    DigitArith arith(ns);
    Expansion x = Expansion::parse("223011");
    Expansion y = Expansion::parse("2232141");
    for (auto _ : state) {
        benchmark::DoNotOptimize(arith.multiply(x, y));
    }
}
BENCHMARK(BM_DigitMultiply);

void BM_OracleMultiply(benchmark::State& state) {
    NumberSystem ns = make_base();
    Expansion x = Expansion::parse("223011");
    Expansion y = Expansion::parse("2232141");
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_multiply(ns, x, y));
    }
}
BENCHMARK(BM_OracleMultiply);

void BM_ApproximateExpansion(benchmark::State& state) {
    NumberSystem ns = make_base();
    long n = state.range(0);
    ComplexInput x = ComplexInput::sqrt2(64 + 4 * n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(approximate_expansion(ns, x, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ApproximateExpansion)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_WitnessSet(benchmark::State& state) {
    NumberSystem ns = make_base();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_witness_set(SrsParam::from(ns)));
    }
}
BENCHMARK(BM_WitnessSet);

void BM_TileCloud(benchmark::State& state) {
    NumberSystem ns = make_base();
    LatticePoint n(Int(0), Int(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tile_cloud(ns, n, static_cast<int>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TileCloud)->DenseRange(4, 10, 2)->Complexity();

}  // namespace

BENCHMARK_MAIN();
