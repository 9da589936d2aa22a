#include <benchmark/benchmark.h>

#include <cmath>

#include "specshare/numerics.hpp"

using namespace specshare;

static void BM_RhoQuadrature(benchmark::State& state) {
    const double t = std::pow(10.0, static_cast<double>(state.range(0)) / 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho(t, 4.0));
    }
}
BENCHMARK(BM_RhoQuadrature)->Arg(-10)->Arg(0)->Arg(10)->Arg(30);

static void BM_RhoHypergeometric(benchmark::State& state) {
    const double t = std::pow(10.0, static_cast<double>(state.range(0)) / 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_hypergeometric(t, 4.0));
    }
}
BENCHMARK(BM_RhoHypergeometric)->Arg(-10)->Arg(0)->Arg(10)->Arg(30);

static void BM_Gauss2F1FarLeft(benchmark::State& state) {
    const double z = -static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_2f1(1.0, 0.5, 1.5, z));
    }
}
BENCHMARK(BM_Gauss2F1FarLeft)->Arg(1)->Arg(10)->Arg(1000);

static void BM_UpperIncompleteGammaNegative(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(upper_incomplete_gamma(-0.5, 2.5));
    }
}
BENCHMARK(BM_UpperIncompleteGammaNegative);

static void BM_SemiInfiniteQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_semi_infinite([](double t) { return std::exp(-(t + t * t)); }));
    }
}
BENCHMARK(BM_SemiInfiniteQuadrature);

BENCHMARK_MAIN();
