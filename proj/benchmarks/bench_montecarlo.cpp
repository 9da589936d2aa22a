#include <benchmark/benchmark.h>

#include <numbers>

#include "specshare/montecarlo.hpp"

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
    s.bands = {{"L1", 1.0, 10.0, s.buyer_intensity, 1.0, true}};
    return s;
}

} // namespace

static void BM_SinrTrial(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    const double horizon = static_cast<double>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Rng rng = Rng::for_trial(1, 0, trial++);
        benchmark::DoNotOptimize(sinr_trial(s, "L1", rng, horizon));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(trial));
}
BENCHMARK(BM_SinrTrial)->Arg(1)->Arg(4)->Arg(8);

static void BM_EstimateCoverage10k(benchmark::State& state) {
    const SharingScenario s = baseline_scenario();
    McConfig mc;
    mc.trials = 10000;
    mc.seed = 42;
    mc.region_radius_m = 500.0;
    mc.max_workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_coverage(s, "L1", 10.0, mc));
    }
    state.SetItemsProcessed(mc.trials * state.iterations());
}
BENCHMARK(BM_EstimateCoverage10k)->Arg(1)->Arg(4);

static void BM_PoissonSampling(benchmark::State& state) {
    Rng rng(7);
    const double mean = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.poisson(mean));
    }
}
BENCHMARK(BM_PoissonSampling)->Arg(10)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
