#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specshare/coverage.hpp"
#include "specshare/rate.hpp"
#include "support/oracle.hpp"

using namespace specshare;

namespace {

constexpr double kPi = std::numbers::pi;

SharingScenario make_scenario(double tenant_count, double noise_dbm, int n_bands = 2,
                              double buyer_count = 10.0) {
    SharingScenario s;
    s.buyer_count = buyer_count;
    s.region_radius_m = 500.0;
    s.buyer_intensity = buyer_count / (kPi * 500.0 * 500.0);
    s.radio.alpha = 4.0;
    s.radio.tx_power_dbm = 10.0;
    s.radio.max_power_dbm = 10.0;
    s.radio.noise_dbm = noise_dbm;
    s.radio.sinr_threshold_db = 10.0;
    const double tenant_intensity = tenant_count / (kPi * 500.0 * 500.0);
    for (int i = 0; i < n_bands; ++i) {
        s.bands.push_back({"L" + std::to_string(i + 1), 1.0, tenant_count, tenant_intensity,
                           1.0, true});
    }
    return s;
}

} // namespace

TEST_CASE("rate of a zero coverage curve is zero") {
    CHECK(rate_from_coverage([](double) { return 0.0; }) == doctest::Approx(0.0));
}

TEST_CASE("rate of an exponential coverage curve matches the E1 identity") {
    const double value = rate_from_coverage([](double t) { return std::exp(-t); });
    CHECK(value == doctest::Approx(0.59634736232319407).epsilon(1e-10));
    const double reference = oracle::simpson(
        [](double t) { return std::exp(-std::expm1(t)); }, 0.0, 30.0, 1e-13);
    CHECK(value == doctest::Approx(reference).epsilon(1e-10));
}

TEST_CASE("no-noise single-operator rate through both code paths") {
    SharingScenario s = make_scenario(0.0, -10000.0);
    const double via_formula = rate_band(s, "L1");
    const double via_coverage = rate_from_coverage(
        [](double t) { return 1.0 / (1.0 + rho(t, 4.0)); });
    CHECK(std::abs(via_formula - via_coverage) <= 1e-6);
    CHECK(via_formula == doctest::Approx(1.4889876246658296).epsilon(1e-8));
}

TEST_CASE("no-noise rate is independent of the buyer intensity scale") {
    SharingScenario base = make_scenario(0.0, -10000.0);
    SharingScenario scaled = make_scenario(0.0, -10000.0, 2, 100.0);
    CHECK(rate_band(base, "L1") == doctest::Approx(rate_band(scaled, "L1")).epsilon(1e-9));
}

TEST_CASE("hypergeometric and coverage-integral routes agree on the baseline band") {
    SharingScenario s = make_scenario(10.0, -150.0);
    const double direct = rate_band(s, "L1");
    const double via_cov = rate_from_coverage([&s](double t) {
        return coverage_band(s, "L1", t, CoverageMethod::closed_form);
    });
    CHECK(std::abs(direct - via_cov) <= 1e-6 * direct);
    CHECK(direct == doctest::Approx(0.98846958275366272).epsilon(1e-8));
    CHECK(direct > 0.0);
    CHECK(std::isfinite(direct));
}

TEST_CASE("rate_total sums per-band rates linearly") {
    SharingScenario two = make_scenario(10.0, -150.0, 2);
    const RateReport report2 = rate_total(two);
    CHECK(report2.per_band.size() == 2);
    CHECK(report2.total ==
          doctest::Approx(2.0 * report2.per_band[0].second).epsilon(1e-12));

    SharingScenario six = make_scenario(10.0, -150.0, 6);
    const RateReport report6 = rate_total(six);
    CHECK(report6.total == doctest::Approx(3.0 * report2.total).epsilon(1e-9));

    SharingScenario one = make_scenario(10.0, -150.0, 1);
    CHECK(rate_total(one).total == doctest::Approx(report2.per_band[0].second).epsilon(1e-12));
}

TEST_CASE("rate_total requires a purchased band") {
    SharingScenario s = make_scenario(10.0, -150.0);
    s.bands[0].purchased = false;
    s.bands[1].purchased = false;
    CHECK_THROWS_AS(rate_total(s), ConfigError);
    CHECK_THROWS_AS(rate_band(s, "L1"), ConfigError);
    CHECK_THROWS_AS(rate_band(s, "L99"), UnknownBandError);
}

TEST_CASE("rate trends: tenant hurts, buyer intensity helps") {
    double prev = 10.0;
    for (double tenants : {0.0, 5.0, 10.0, 30.0}) {
        SharingScenario s = make_scenario(tenants, -150.0);
        const double r = rate_band(s, "L1");
        CHECK(r < prev);
        prev = r;
    }
    double prev_buyer = 0.0;
    for (double buyers : {1.0, 5.0, 10.0, 50.0}) {
        SharingScenario s = make_scenario(10.0, -150.0, 2, buyers);
        const double r = rate_band(s, "L1");
        CHECK(r > prev_buyer);
        prev_buyer = r;
    }
}

TEST_CASE("rate saturates at high buyer intensity") {
    // tenant deployment fixed at the baseline count while the buyer scales
    auto rate_at_scale = [](double factor) {
        SharingScenario s = make_scenario(10.0, -150.0, 1, 10.0 * factor);
        const double tenant_intensity = 10.0 / (kPi * 500.0 * 500.0);
        s.bands[0].tenant_count = 10.0;
        s.bands[0].tenant_intensity = tenant_intensity;
        return rate_band(s, "L1");
    };
    const double r100 = rate_at_scale(100.0);
    const double r1000 = rate_at_scale(1000.0);
    CHECK(std::abs(r100 - r1000) / r1000 <= 0.01);
}
