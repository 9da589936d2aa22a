#include "specshare/rate.hpp"

#include <cmath>
#include <numbers>

#include "specshare/coverage.hpp"

namespace specshare {

namespace {

constexpr double kPi = std::numbers::pi;

// Coverage at threshold e^T - 1 vanishes long before T reaches 700; cutting
// there keeps e^T inside double range.
constexpr double kLogThresholdCutoff = 700.0;

} // namespace

std::string_view to_string(RateMethod method) {
    switch (method) {
        case RateMethod::coverage_integral: return "coverage-integral";
        case RateMethod::hypergeometric: return "hypergeometric";
        case RateMethod::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

double rate_from_coverage(const std::function<double(double)>& coverage_at_lin_threshold,
                          const QuadratureSpec& spec) {
    auto integrand = [&coverage_at_lin_threshold](double t_nats) {
        if (t_nats > kLogThresholdCutoff) return 0.0;
        if (t_nats == 0.0) return 1.0;
        return coverage_at_lin_threshold(std::expm1(t_nats));
    };
    return integrate_semi_infinite(integrand, spec);
}

namespace detail {

double rate_band_value(const SharingScenario& s, const SubBand& band,
                       const QuadratureSpec& spec) {
    const double lambda_a = s.buyer_intensity;
    const double lambda_i = s.buyer_intensity + band.tenant_activity * band.tenant_intensity;
    const double alpha = s.radio.alpha;
    const double noise_over_p = s.radio.noise_w() / s.radio.tx_power_w();
    const double inv_gamma = 1.0 / std::tgamma(2.0 / alpha);

    auto integrand = [=](double t_nats) {
        if (t_nats > kLogThresholdCutoff) return 0.0;
        const double that = std::expm1(t_nats);
        if (that <= 0.0) return 1.0;
        const double rho_val = rho_hypergeometric(that, alpha);
        const double b_coef = that * noise_over_p;
        const double noise_term =
            b_coef == 0.0 ? 0.0 : 0.5 * alpha * std::pow(b_coef, 2.0 / alpha) * inv_gamma;
        return kPi * lambda_a / (kPi * (lambda_i * rho_val + lambda_a) + noise_term);
    };
    return integrate_semi_infinite(integrand, spec);
}

} // namespace detail

double rate_band(const SharingScenario& s, std::string_view band_id,
                 const QuadratureSpec& spec) {
    const SubBand& band = s.band(band_id);
    if (!band.purchased) {
        throw ConfigError("band '" + band.id + "' is not purchased");
    }
    return detail::rate_band_value(s, band, spec);
}

RateReport rate_total(const SharingScenario& s, const QuadratureSpec& spec) {
    const auto purchased = s.purchased_bands();
    if (purchased.empty()) {
        throw ConfigError("scenario has no purchased bands");
    }
    RateReport report;
    report.method = RateMethod::hypergeometric;
    for (const SubBand* band : purchased) {
        const double value = detail::rate_band_value(s, *band, spec);
        report.per_band.emplace_back(band->id, value);
        report.total += value;
    }
    return report;
}

} // namespace specshare
