#include <benchmark/benchmark.h>

#include <numbers>

#include "specshare/coverage.hpp"
#include "specshare/rate.hpp"

using namespace specshare;

namespace {

SharingScenario baseline_scenario() {
    SharingScenario s;
    s.buyer_count = 10.0;
    s.region_radius_m = 500.0;
    s.buyer_intensity = 10.0 / (std::numbers::pi * 500.0 * 500.0);
    s.radio.alpha = 4.0;
    s.radio.tx_power_dbm = 10.0;
    s.radio.max_power_dbm = 10.0;
    s.radio.noise_dbm = -150.0;
    s.radio.sinr_threshold_db = 10.0;
    s.bands = {{"L1", 1.0, 10.0, s.buyer_intensity, 1.0, true},
               {"L2", 1.0, 10.0, s.buyer_intensity, 1.0, true}};
    return s;
}

} // namespace

static void BM_CoverageExact(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            coverage_exact(s.buyer_intensity, 2.0 * s.buyer_intensity, 10.0, s.radio));
    }
}
BENCHMARK(BM_CoverageExact);

static void BM_CoverageApprox(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            coverage_approx(s.buyer_intensity, 2.0 * s.buyer_intensity, 10.0, s.radio));
    }
}
BENCHMARK(BM_CoverageApprox);

static void BM_BetaGeneralRayleigh(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_general(10.0, 4.0, 0.01, GainModel::rayleigh_unit_mean));
    }
}
BENCHMARK(BM_BetaGeneralRayleigh);

static void BM_RateBand(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_band(s, "L1"));
    }
}
BENCHMARK(BM_RateBand);

static void BM_RateViaCoverageIntegral(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_from_coverage(
            [&s](double t) { return coverage_band(s, "L1", t, CoverageMethod::closed_form); }));
    }
}
BENCHMARK(BM_RateViaCoverageIntegral);

BENCHMARK_MAIN();
