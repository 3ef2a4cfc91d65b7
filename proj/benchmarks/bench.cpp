#include <benchmark/benchmark.h>

#include <enriques/gw_engine.hpp>
#include <enriques/lattice.hpp>
#include <enriques/modular.hpp>

using namespace enriques;
using lattice::LatticeVector;

static void BM_ShortVectors(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice::short_vectors(state.range(0)));
}
BENCHMARK(BM_ShortVectors)->Arg(4)->Arg(8);

static void BM_Decompositions(benchmark::State& state) {
    const LatticeVector beta(state.range(0), state.range(0), {});
    for (auto _ : state) {
        std::size_t n = 0;
        lattice::for_each_decomposition(beta, [&](const LatticeVector&, const LatticeVector&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Decompositions)->Arg(3)->Arg(4);

// Fresh engine each iteration, so the whole recursion below beta is timed.
static void BM_Genus1Recursion(benchmark::State& state) {
    const LatticeVector beta(state.range(0), state.range(0), {});
    for (auto _ : state) {
        gw::Engine engine;
        benchmark::DoNotOptimize(engine.enriques_genus1(beta));
    }
}
BENCHMARK(BM_Genus1Recursion)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SeriesProduct(benchmark::State& state) {
    const auto e2 = qseries::eisenstein(2, state.range(0));
    const auto e4 = qseries::eisenstein(4, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(e2 * e4);
}
BENCHMARK(BM_SeriesProduct)->Arg(50)->Arg(200);

static void BM_CCoefficients(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qseries::c_coefficients(2, state.range(0)));
}
BENCHMARK(BM_CCoefficients)->Arg(40);
BENCHMARK_MAIN();
