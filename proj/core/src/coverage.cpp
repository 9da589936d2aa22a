#include "specshare/coverage.hpp"

#include <cmath>
#include <numbers>

namespace specshare {

namespace {

constexpr double kPi = std::numbers::pi;

void check_positive_threshold(double t_lin) {
    if (!(t_lin > 0.0)) throw std::domain_error("coverage: linear threshold must be > 0");
}

} // namespace

std::string_view to_string(CoverageMethod method) {
    switch (method) {
        case CoverageMethod::exact_integral: return "exact-integral";
        case CoverageMethod::closed_form: return "closed-form";
        case CoverageMethod::interference_limited: return "interference-limited";
        case CoverageMethod::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

double beta_rayleigh(double t_lin, double alpha) {
    check_positive_threshold(t_lin);
    return 1.0 + rho(t_lin, alpha);
}

double beta_general(double t_lin, double alpha, double p, GainModel gain_model,
                    const QuadratureSpec& spec) {
    check_positive_threshold(t_lin);
    if (!(alpha > 2.0)) throw std::domain_error("beta_general: alpha must be > 2");
    if (!(p > 0.0)) throw std::domain_error("beta_general: power must be > 0");

    const double e = 2.0 / alpha;
    const double gamma_at_e = std::tgamma(-e);  // -2/alpha in (-1, 0): no pole
    // With mu = 1/p the power-scaled gain h = p*g makes mu*T*h = T*g, so the
    // expectation is written over the unit-mean gain g and p drops out.
    switch (gain_model) {
        case GainModel::rayleigh_unit_mean: {
            auto integrand = [t_lin, e, gamma_at_e](double g) {
                // g^{2/alpha} (Gamma(-2/alpha, Tg) - Gamma(-2/alpha)) -> T^{-2/alpha}/e
                // as g -> 0
                if (g == 0.0) return std::pow(t_lin, -e) / e;
                return std::exp(-g) * std::pow(g, e) *
                       (upper_incomplete_gamma(-e, t_lin * g) - gamma_at_e);
            };
            const double expectation = integrate_semi_infinite(integrand, spec);
            return (2.0 * std::pow(t_lin, e) / alpha) * expectation;
        }
        case GainModel::deterministic_unit: {
            const double bracket = upper_incomplete_gamma(-e, t_lin) - gamma_at_e;
            return (2.0 * std::pow(t_lin, e) / alpha) * bracket;
        }
    }
    throw std::domain_error("beta_general: unsupported gain model");
}

double coverage_exact(double lambda_a, double lambda_i, double t_lin,
                      const RadioParams& radio, const QuadratureSpec& spec) {
    check_positive_threshold(t_lin);
    if (!(lambda_a > 0.0)) throw std::domain_error("coverage_exact: lambda_a must be > 0");
    if (lambda_i < 0.0) throw std::domain_error("coverage_exact: lambda_i must be >= 0");

    const double beta = beta_rayleigh(t_lin, radio.alpha);
    const double a_coef = kPi * (lambda_i * (beta - 1.0) + lambda_a);
    const double b_coef = t_lin * radio.noise_w() / radio.tx_power_w();

    // Substituting s = A z puts the kernel on a unit scale regardless of the
    // intensity magnitudes: P = (pi lambda_A / A) int exp(-s - b s^{a/2}) ds.
    const double half_alpha = 0.5 * radio.alpha;
    const double b_scaled = b_coef / std::pow(a_coef, half_alpha);
    auto integrand = [b_scaled, half_alpha](double s) {
        if (s == 0.0) return 1.0;
        return std::exp(-s - b_scaled * std::pow(s, half_alpha));
    };
    return (kPi * lambda_a / a_coef) * integrate_semi_infinite(integrand, spec);
}

double coverage_approx(double lambda_a, double lambda_i, double t_lin,
                       const RadioParams& radio) {
    check_positive_threshold(t_lin);
    if (lambda_a < 0.0) throw std::domain_error("coverage_approx: lambda_a must be >= 0");
    if (lambda_a == 0.0) return 0.0;

    const double alpha = radio.alpha;
    const double beta = beta_rayleigh(t_lin, alpha);
    const double a_coef = kPi * (lambda_i * (beta - 1.0) + lambda_a);
    const double b_coef = t_lin * radio.noise_w() / radio.tx_power_w();
    const double noise_term =
        b_coef == 0.0 ? 0.0
                      : 0.5 * alpha * std::pow(b_coef, 2.0 / alpha) / std::tgamma(2.0 / alpha);
    return kPi * lambda_a / (a_coef + noise_term);
}

namespace detail {

double coverage_band_value(const SharingScenario& s, const SubBand& band, double t_lin,
                           CoverageMethod method, const QuadratureSpec& spec) {
    const double lambda_a = s.buyer_intensity;
    const double lambda_i = s.buyer_intensity + band.tenant_activity * band.tenant_intensity;
    switch (method) {
        case CoverageMethod::exact_integral:
            return coverage_exact(lambda_a, lambda_i, t_lin, s.radio, spec);
        case CoverageMethod::closed_form:
            return coverage_approx(lambda_a, lambda_i, t_lin, s.radio);
        case CoverageMethod::interference_limited: {
            const double beta = beta_rayleigh(t_lin, s.radio.alpha);
            const double ratio = band.tenant_activity * band.tenant_intensity / lambda_a;
            return 1.0 / (beta + (beta - 1.0) * ratio);
        }
        case CoverageMethod::monte_carlo:
            break;
    }
    throw std::domain_error("coverage_band: method must be analytical");
}

} // namespace detail

double coverage_band(const SharingScenario& s, std::string_view band_id, double t_lin,
                     CoverageMethod method, const QuadratureSpec& spec) {
    const SubBand& band = s.band(band_id);
    if (!band.purchased) {
        throw ConfigError("band '" + band.id + "' is not purchased");
    }
    return detail::coverage_band_value(s, band, t_lin, method, spec);
}

namespace {

CoverageReport total_with(const SharingScenario& s, double t_lin, CoverageMethod method,
                          const QuadratureSpec& spec) {
    const auto purchased = s.purchased_bands();
    if (purchased.empty()) {
        throw ConfigError("scenario has no purchased bands");
    }
    CoverageReport report;
    report.method = method;
    report.threshold_db = linear_to_db(t_lin);
    for (const SubBand* band : purchased) {
        const double value = detail::coverage_band_value(s, *band, t_lin, method, spec);
        report.per_band.emplace_back(band->id, value);
        report.aggregate += value;
    }
    return report;
}

} // namespace

CoverageReport coverage_total(const SharingScenario& s, double t_lin, CoverageMethod method,
                              const QuadratureSpec& spec) {
    if (method == CoverageMethod::monte_carlo) {
        throw std::domain_error("coverage_total: use the montecarlo module for MC estimates");
    }
    return total_with(s, t_lin, method, spec);
}

CoverageReport coverage_interference_limited(const SharingScenario& s) {
    return total_with(s, s.radio.sinr_threshold_lin(), CoverageMethod::interference_limited, {});
}

} // namespace specshare
