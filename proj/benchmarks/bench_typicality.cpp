#include <benchmark/benchmark.h>

#include "typicality/counter_rng.hpp"
#include "typicality/haar_mc.hpp"
#include "typicality/mutual_information.hpp"
#include "typicality/pclt.hpp"
#include "typicality/special_functions.hpp"

using namespace typicality;

static void BM_Digamma(benchmark::State& state) {
    double x = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(digamma(x));
        x += 0.37;
        if (x > 500.0) x -= 499.0;
    }
}
BENCHMARK(BM_Digamma);

static void BM_Harmonic(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(harmonic(n));
}
BENCHMARK(BM_Harmonic)->Arg(64)->Arg(4096);

static void BM_RegIncompleteBeta(benchmark::State& state) {
    double x = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reg_incomplete_beta(x, 6.0, 6.0));
        x += 0.017;
        if (x > 0.99) x -= 0.98;
    }
}
BENCHMARK(BM_RegIncompleteBeta);

static void BM_PkDensity(benchmark::State& state) {
    const SubsystemDims dims{2, 6};
    double p = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pk_density(dims, p));
        p += 0.013;
        if (p > 0.99) p -= 0.98;
    }
}
BENCHMARK(BM_PkDensity);

static void BM_TailComparison(benchmark::State& state) {
    const SubsystemDims dims{2, 6};
    for (auto _ : state) benchmark::DoNotOptimize(tail_comparison(dims, 0.95));
}
BENCHMARK(BM_TailComparison);

static void BM_MiExact(benchmark::State& state) {
    const TripartiteDims dims{3, 4, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mi_exact(dims));
}
BENCHMARK(BM_MiExact)->Arg(12)->Arg(96);

static void BM_MiSeriesOptimal(benchmark::State& state) {
    const TripartiteDims dims{2, 2, 16};
    const int k_star = optimal_truncation_order(dims, 64);
    for (auto _ : state) benchmark::DoNotOptimize(mi_bernoulli_series(dims, k_star));
}
BENCHMARK(BM_MiSeriesOptimal);

static void BM_BoseEinsteinFolded(benchmark::State& state) {
    const TripartiteDims dims{2, 2, 4};
    for (auto _ : state) benchmark::DoNotOptimize(bose_einstein_j_folded(dims));
}
BENCHMARK(BM_BoseEinsteinFolded);

static void BM_MiClosedForm(benchmark::State& state) {
    const TripartiteDims dims{3, 4, 24};
    for (auto _ : state) benchmark::DoNotOptimize(mi_closed_form(dims));
}
BENCHMARK(BM_MiClosedForm);

static void BM_CounterUniform(benchmark::State& state) {
    CounterRng rng(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_CounterUniform);

static void BM_SampleReduceDiagonalize(benchmark::State& state) {
    const SubsystemDims dims{static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1))};
    std::uint64_t stream = 0;
    for (auto _ : state) {
        CounterRng rng(7, stream++);
        const ReducedDensity rho = partial_trace(sample_state(dims, rng));
        benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
    }
}
BENCHMARK(BM_SampleReduceDiagonalize)->Args({2, 6})->Args({4, 16});

static void BM_EnsembleBlock(benchmark::State& state) {
    const SubsystemDims dims{2, 6};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_ensemble(dims, 1024, seed++, 1));
    }
}
BENCHMARK(BM_EnsembleBlock)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
