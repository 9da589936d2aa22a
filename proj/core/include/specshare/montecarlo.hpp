#ifndef SPECSHARE_MONTECARLO_HPP
#define SPECSHARE_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "specshare/scenario.hpp"

namespace specshare {

/// Counter-based deterministic RNG: xoshiro256++ seeded through a SplitMix64
/// finalizer. Per-trial substreams are derived from (seed, stream, trial), so
/// results do not depend on how trials are scheduled across workers.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    static Rng for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

    std::uint64_t next_u64();
    double uniform();        ///< [0, 1)
    double exponential();    ///< unit mean
    bool bernoulli(double p);
    std::int64_t poisson(double mean);

private:
    std::uint64_t state_[4];
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Homogeneous PPP realization on a disk of the given radius centred at the
/// origin: Poisson(intensity * pi * radius^2) points, uniform on the disk.
std::vector<Point> sample_ppp(double intensity, double radius_m, Rng& rng);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::int64_t trials = 0;
};

/// One SINR realization on a band: typical UE at the origin, serving SBS the
/// nearest buyer point, unit-mean exponential gains, activity indicators
/// Bernoulli(nu). Interference fields are sampled on a disk of radius
/// horizon_factor * region_radius_m so that the truncated far field is
/// negligible against the analytical infinite-plane model; co-channel
/// interferers lie beyond the serving link distance (the association
/// exclusion the analytical coverage kernel encodes).
double sinr_trial(const SharingScenario& s, std::string_view band_id, Rng& rng,
                  double horizon_factor = McConfig{}.horizon_factor);

/// All per-trial SINR samples for a band, in trial order. Deterministic for
/// fixed (scenario, mc); identical across worker counts.
std::vector<double> sinr_samples(const SharingScenario& s, std::string_view band_id,
                                 const McConfig& mc);

McEstimate estimate_coverage(const SharingScenario& s, std::string_view band_id,
                             double t_lin, const McConfig& mc);

std::vector<McEstimate> estimate_coverage_multi(const SharingScenario& s,
                                                std::string_view band_id,
                                                std::span<const double> t_lins,
                                                const McConfig& mc);

McEstimate estimate_rate(const SharingScenario& s, std::string_view band_id,
                         const McConfig& mc);

/// Shared-sample summary for one band: coverage at each requested threshold
/// plus the rate, all from the same trial set.
struct BandSimulation {
    std::vector<McEstimate> coverage;
    McEstimate rate;
    double resample_rate = 0.0;  ///< fraction of trials redrawn for an empty buyer field
};

BandSimulation simulate_band(const SharingScenario& s, std::string_view band_id,
                             std::span<const double> t_lins, const McConfig& mc);

namespace detail {
/// SINR formula for one realization: serving_gain * serving_dist^{-alpha} * p
/// over (interference + noise), interference already in watts.
double sinr_value(double serving_gain, double serving_dist_m, double interference_w,
                  const RadioParams& radio);
} // namespace detail

} // namespace specshare

#endif
