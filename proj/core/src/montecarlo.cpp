#include "specshare/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "specshare/numerics.hpp"

namespace specshare {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kTrialBlock = 4096;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

int resolve_workers(int max_workers) {
    if (max_workers > 0) return max_workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(block_begin, block_end) over fixed-size trial blocks. The block
/// grid is independent of the worker count, so any per-trial output written
/// into per-trial slots is scheduling-invariant.
void for_each_block(std::int64_t n, int workers, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t blocks = (n + kTrialBlock - 1) / kTrialBlock;
    if (workers <= 1 || blocks <= 1) {
        for (std::int64_t b = 0; b < blocks; ++b) {
            fn(b * kTrialBlock, std::min(n, (b + 1) * kTrialBlock));
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            fn(b * kTrialBlock, std::min(n, (b + 1) * kTrialBlock));
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::int64_t>(workers, blocks));
    pool.reserve(spawn);
    for (int i = 0; i < spawn; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
}

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (std::uint64_t& w : state_) {
        x = mix64(x);
        w = x;
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    std::uint64_t u = mix64(seed);
    u = mix64(u ^ (stream + 0x632BE59BD9B4E019ULL));
    u = mix64(u ^ (trial + 0xD1B54A32D192ED03ULL));
    return Rng(u);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::exponential() { return -std::log1p(-uniform()); }

bool Rng::bernoulli(double p) { return uniform() < p; }

std::int64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::domain_error("poisson: mean must be >= 0");
    std::int64_t count = 0;
    // Knuth's product method in chunks; exp(-chunk) stays far from underflow.
    while (mean > 0.0) {
        const double chunk = std::min(mean, 40.0);
        mean -= chunk;
        const double limit = std::exp(-chunk);
        double prod = uniform();
        while (prod > limit) {
            ++count;
            prod *= uniform();
        }
    }
    return count;
}

std::vector<Point> sample_ppp(double intensity, double radius_m, Rng& rng) {
    if (intensity < 0.0) throw std::domain_error("sample_ppp: intensity must be >= 0");
    if (!(radius_m > 0.0)) throw std::domain_error("sample_ppp: radius must be > 0");
    const std::int64_t n = rng.poisson(intensity * kPi * radius_m * radius_m);
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double r = radius_m * std::sqrt(rng.uniform());
        const double theta = 2.0 * kPi * rng.uniform();
        points.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return points;
}

namespace detail {

double sinr_value(double serving_gain, double serving_dist_m, double interference_w,
                  const RadioParams& radio) {
    const double p = radio.tx_power_w();
    const double signal = serving_gain * std::pow(serving_dist_m, -radio.alpha) * p;
    return signal / (interference_w + radio.noise_w());
}

} // namespace detail

namespace {

double pathloss_from_r2(double r2, double alpha) {
    // distance^-alpha computed from the squared distance; alpha = 4 is the
    // common case and avoids pow.
    if (alpha == 4.0) return 1.0 / (r2 * r2);
    return std::pow(r2, -0.5 * alpha);
}

/// One trial on a band, given its derived rng. Only distances matter for the
/// SINR, so points are drawn radially (r^2 uniform on [0, R^2]).
double run_trial(const SharingScenario& s, const SubBand& band, Rng& rng,
                 double horizon_factor) {
    const double radius = s.region_radius_m * horizon_factor;
    const double area = kPi * radius * radius;
    const double r2_scale = radius * radius;
    const double alpha = s.radio.alpha;

    const std::int64_t n_buyer = rng.poisson(s.buyer_intensity * area);
    if (n_buyer == 0) return std::numeric_limits<double>::quiet_NaN();  // caller resamples

    // Buyer field: nearest point serves, the rest interfere.
    double serving_r2 = std::numeric_limits<double>::infinity();
    std::int64_t serving_idx = -1;
    thread_local std::vector<double> buyer_r2;
    buyer_r2.clear();
    buyer_r2.reserve(static_cast<std::size_t>(n_buyer));
    for (std::int64_t i = 0; i < n_buyer; ++i) {
        const double r2 = r2_scale * rng.uniform();
        buyer_r2.push_back(r2);
        if (r2 < serving_r2) {
            serving_r2 = r2;
            serving_idx = i;
        }
    }

    const double serving_gain = rng.exponential();

    double interference = 0.0;  // in units of p
    for (std::int64_t i = 0; i < n_buyer; ++i) {
        if (i == serving_idx) continue;
        interference += rng.exponential() * pathloss_from_r2(buyer_r2[i], alpha);
    }

    // Tenant field, thinned by the activity level. The analytical model puts
    // every co-channel interferer beyond the serving distance, so nearer
    // tenant points do not radiate on this band.
    if (band.tenant_intensity > 0.0) {
        const std::int64_t n_tenant = rng.poisson(band.tenant_intensity * area);
        for (std::int64_t i = 0; i < n_tenant; ++i) {
            const double r2 = r2_scale * rng.uniform();
            const bool active = band.tenant_activity >= 1.0
                                    ? true
                                    : (band.tenant_activity <= 0.0 ? false
                                                                   : rng.bernoulli(band.tenant_activity));
            if (active && r2 >= serving_r2) {
                interference += rng.exponential() * pathloss_from_r2(r2, alpha);
            }
        }
    }

    const double p = s.radio.tx_power_w();
    const double signal = serving_gain * pathloss_from_r2(serving_r2, alpha) * p;
    return signal / (interference * p + s.radio.noise_w());
}

struct SampleRun {
    std::vector<double> sinrs;
    std::int64_t resamples = 0;
};

SampleRun run_samples(const SharingScenario& s, std::string_view band_id, const McConfig& mc) {
    if (mc.trials < 1) throw std::domain_error("montecarlo: trials must be >= 1");
    const std::size_t band_idx = s.band_index(band_id);
    const SubBand& band = s.bands[band_idx];
    if (!band.purchased) throw ConfigError("band '" + band.id + "' is not purchased");

    SampleRun run;
    run.sinrs.assign(static_cast<std::size_t>(mc.trials), 0.0);
    std::atomic<std::int64_t> resamples{0};

    const int workers = resolve_workers(mc.max_workers);
    for_each_block(mc.trials, workers, [&](std::int64_t begin, std::int64_t end) {
        std::int64_t local_resamples = 0;
        for (std::int64_t t = begin; t < end; ++t) {
            double sinr;
            std::uint64_t attempt = 0;
            for (;;) {
                Rng rng = Rng::for_trial(mc.seed, band_idx * 0x10001ULL + attempt, static_cast<std::uint64_t>(t));
                sinr = run_trial(s, band, rng, mc.horizon_factor);
                if (!std::isnan(sinr)) break;
                ++attempt;
                ++local_resamples;
            }
            run.sinrs[static_cast<std::size_t>(t)] = sinr;
        }
        resamples.fetch_add(local_resamples);
    });
    run.resamples = resamples.load();
    return run;
}

McEstimate binomial_estimate(std::int64_t hits, std::int64_t n, double confidence) {
    McEstimate est;
    est.trials = n;
    est.mean = static_cast<double>(hits) / static_cast<double>(n);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(n));
    const double z = inverse_normal_cdf(0.5 * (1.0 + confidence));
    est.ci_low = est.mean - z * est.std_error;
    est.ci_high = est.mean + z * est.std_error;
    return est;
}

McEstimate mean_estimate(double sum, double sum_sq, std::int64_t n, double confidence) {
    McEstimate est;
    est.trials = n;
    est.mean = sum / static_cast<double>(n);
    const double var = n > 1 ? std::max(0.0, (sum_sq - sum * est.mean) / static_cast<double>(n - 1)) : 0.0;
    est.std_error = std::sqrt(var / static_cast<double>(n));
    const double z = inverse_normal_cdf(0.5 * (1.0 + confidence));
    est.ci_low = est.mean - z * est.std_error;
    est.ci_high = est.mean + z * est.std_error;
    return est;
}

} // namespace

double sinr_trial(const SharingScenario& s, std::string_view band_id, Rng& rng,
                  double horizon_factor) {
    const SubBand& band = s.band(band_id);
    if (!band.purchased) throw ConfigError("band '" + band.id + "' is not purchased");
    for (;;) {
        const double sinr = run_trial(s, band, rng, horizon_factor);
        if (!std::isnan(sinr)) return sinr;  // empty buyer field: draw again
    }
}

std::vector<double> sinr_samples(const SharingScenario& s, std::string_view band_id,
                                 const McConfig& mc) {
    return run_samples(s, band_id, mc).sinrs;
}

BandSimulation simulate_band(const SharingScenario& s, std::string_view band_id,
                             std::span<const double> t_lins, const McConfig& mc) {
    const SampleRun run = run_samples(s, band_id, mc);
    const std::int64_t n = mc.trials;

    BandSimulation out;
    out.resample_rate = static_cast<double>(run.resamples) / static_cast<double>(n);
    for (double t_lin : t_lins) {
        std::int64_t hits = 0;
        for (double sinr : run.sinrs) {
            if (sinr >= t_lin) ++hits;
        }
        out.coverage.push_back(binomial_estimate(hits, n, mc.confidence));
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double sinr : run.sinrs) {
        const double r = std::log1p(sinr);
        sum += r;
        sum_sq += r * r;
    }
    out.rate = mean_estimate(sum, sum_sq, n, mc.confidence);
    return out;
}

McEstimate estimate_coverage(const SharingScenario& s, std::string_view band_id,
                             double t_lin, const McConfig& mc) {
    const double t[1] = {t_lin};
    return simulate_band(s, band_id, t, mc).coverage.front();
}

std::vector<McEstimate> estimate_coverage_multi(const SharingScenario& s,
                                                std::string_view band_id,
                                                std::span<const double> t_lins,
                                                const McConfig& mc) {
    return simulate_band(s, band_id, t_lins, mc).coverage;
}

McEstimate estimate_rate(const SharingScenario& s, std::string_view band_id,
                         const McConfig& mc) {
    return simulate_band(s, band_id, {}, mc).rate;
}

} // namespace specshare
