#ifndef SPECSHARE_COVERAGE_HPP
#define SPECSHARE_COVERAGE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specshare/numerics.hpp"
#include "specshare/scenario.hpp"

namespace specshare {

enum class CoverageMethod {
    exact_integral,
    closed_form,
    interference_limited,
    monte_carlo,
};

std::string_view to_string(CoverageMethod method);

/// Per-band and aggregate SINR coverage. The aggregate is the band-summed
/// value of the multi-band model and deliberately may exceed 1; it is
/// reported verbatim as "aggregate band coverage" and never clamped.
struct CoverageReport {
    std::vector<std::pair<std::string, double>> per_band;
    double aggregate = 0.0;
    CoverageMethod method = CoverageMethod::exact_integral;
    double threshold_db = 0.0;
};

/// Interference factor beta = 1 + rho(T, alpha) for Rayleigh-faded
/// interferers. Independent of transmit power.
double beta_rayleigh(double t_lin, double alpha);

enum class GainModel {
    rayleigh_unit_mean,
    deterministic_unit,
};

/// General-fading interference factor
///   beta = (2 (mu T)^{2/alpha} / alpha) E_h[ h^{2/alpha}
///          (Gamma(-2/alpha, mu T h) - Gamma(-2/alpha)) ],
/// with h the power-scaled interferer gain and mu = 1/p. The expectation is
/// evaluated by quadrature over the gain density; p cancels analytically and
/// the Rayleigh case reproduces beta_rayleigh.
double beta_general(double t_lin, double alpha, double p, GainModel gain_model,
                    const QuadratureSpec& spec = {});

/// Coverage probability of the typical UE,
///   P_c = pi lambda_A int_0^inf exp(-(A z + B z^{alpha/2})) dz,
/// A = pi [lambda_I (beta - 1) + lambda_A], B = T sigma^2 / p (linear units).
double coverage_exact(double lambda_a, double lambda_i, double t_lin,
                      const RadioParams& radio, const QuadratureSpec& spec = {});

/// Closed-form approximation
///   P_c ~= pi lambda_A [A + (alpha/2) B^{2/alpha} / Gamma(2/alpha)]^{-1};
/// exact when B = 0.
double coverage_approx(double lambda_a, double lambda_i, double t_lin,
                       const RadioParams& radio);

/// Per-band coverage P_c(L_j) with lambda_A = lambda_0 and the band's
/// activity-thinned tenant intensity folded into the interference field.
/// The band must exist and be purchased.
double coverage_band(const SharingScenario& s, std::string_view band_id, double t_lin,
                     CoverageMethod method, const QuadratureSpec& spec = {});

/// Aggregate band coverage: sum of P_c(L_j) over purchased bands.
CoverageReport coverage_total(const SharingScenario& s, double t_lin, CoverageMethod method,
                              const QuadratureSpec& spec = {});

/// Interference-limited (sigma^2 -> 0) coverage,
///   P_c(L_j) = 1 / (beta + (beta - 1) lambda_k / lambda_0),
/// at the scenario's configured threshold.
CoverageReport coverage_interference_limited(const SharingScenario& s);

namespace detail {
/// coverage_band without the purchased-flag gate; the planner evaluates
/// candidate bands it has not bought yet.
double coverage_band_value(const SharingScenario& s, const SubBand& band, double t_lin,
                           CoverageMethod method, const QuadratureSpec& spec);
} // namespace detail

} // namespace specshare

#endif
