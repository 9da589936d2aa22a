#ifndef SPECSHARE_RATE_HPP
#define SPECSHARE_RATE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specshare/numerics.hpp"
#include "specshare/scenario.hpp"

namespace specshare {

enum class RateMethod {
    coverage_integral,
    hypergeometric,
    monte_carlo,
};

std::string_view to_string(RateMethod method);

/// Average data rate of the typical UE, nats per unit bandwidth.
struct RateReport {
    std::vector<std::pair<std::string, double>> per_band;
    double total = 0.0;
    RateMethod method = RateMethod::hypergeometric;
};

/// E[ln(1 + SINR)] = int_0^inf P_c(e^T - 1) dT for an arbitrary coverage
/// curve over linear thresholds. The rate carries no reporting threshold by
/// construction.
double rate_from_coverage(const std::function<double(double)>& coverage_at_lin_threshold,
                          const QuadratureSpec& spec = {});

/// Per-band expected rate through the hypergeometric expansion of the
/// coverage kernel: the integrand is the closed-form coverage at threshold
/// e^T - 1 with rho evaluated via 2F1(1, 1-2/alpha; 2-2/alpha; -that).
double rate_band(const SharingScenario& s, std::string_view band_id,
                 const QuadratureSpec& spec = {});

/// Band-summed expected rate over purchased bands.
RateReport rate_total(const SharingScenario& s, const QuadratureSpec& spec = {});

namespace detail {
double rate_band_value(const SharingScenario& s, const SubBand& band,
                       const QuadratureSpec& spec);
} // namespace detail

} // namespace specshare

#endif
