#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specshare/coverage.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace specshare;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLam = 1.2732395447351628e-5;  // 10 per 500 m disk

RadioParams noiseless_radio(double alpha = 4.0) {
    RadioParams r;
    r.alpha = alpha;
    r.tx_power_dbm = 10.0;
    r.max_power_dbm = 10.0;
    r.noise_dbm = -10000.0;  // exactly underflows to 0 W
    r.sinr_threshold_db = 0.0;
    return r;
}

RadioParams baseline_radio() {
    RadioParams r;
    r.alpha = 4.0;
    r.tx_power_dbm = 10.0;
    r.max_power_dbm = 10.0;
    r.noise_dbm = -150.0;
    r.sinr_threshold_db = 10.0;
    return r;
}

SharingScenario two_band_scenario(double tenant_count, const RadioParams& radio) {
    SharingScenario s;
    s.buyer_count = 10.0;
    s.region_radius_m = 500.0;
    s.buyer_intensity = s.buyer_count / (kPi * 500.0 * 500.0);
    const double tenant_intensity = tenant_count / (kPi * 500.0 * 500.0);
    s.radio = radio;
    s.bands = {{"L1", 1.0, tenant_count, tenant_intensity, 1.0, true},
               {"L2", 1.0, tenant_count, tenant_intensity, 1.0, true}};
    return s;
}

} // namespace

TEST_CASE("beta_rayleigh reference points") {
    CHECK(std::abs(beta_rayleigh(1.0, 4.0) - (1.0 + kPi / 4.0)) <= 1e-10);
    CHECK(beta_rayleigh(1e-9, 4.0) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(beta_rayleigh(10.0, 4.0) - 4.9987600505576614) <= 1e-10);
}

TEST_CASE("beta_general under Rayleigh gain reproduces beta_rayleigh for any power") {
    for (double p : {0.001, 0.01, 1.0, 100.0}) {
        for (double t : {0.3, 1.0, 10.0}) {
            for (double alpha : {3.0, 4.0}) {
                const double general =
                    beta_general(t, alpha, p, GainModel::rayleigh_unit_mean);
                const double rayleigh = beta_rayleigh(t, alpha);
                CHECK(std::abs(general - rayleigh) <= 1e-8 * rayleigh);
            }
        }
    }
}

TEST_CASE("beta_general with a point-mass unit gain matches the quadrature oracle") {
    // (2 T^{2/alpha} / alpha) (Gamma(-1/2, T) - Gamma(-1/2)) at T = 1, alpha = 4,
    // with Gamma(-1/2, 1) from brute-force quadrature and Gamma(-1/2) = -2 sqrt(pi).
    const double upper = oracle::simpson(
        [](double t) { return std::pow(t, -1.5) * std::exp(-t); }, 1.0, 70.0, 1e-13);
    const double expected = 0.5 * (upper + 2.0 * std::sqrt(kPi));
    const double value = beta_general(1.0, 4.0, 0.01, GainModel::deterministic_unit);
    CHECK(value == doctest::Approx(expected).epsilon(1e-10));
    CHECK(value == doctest::Approx(1.8615277067962964).epsilon(1e-12));
}

TEST_CASE("coverage_exact no-noise closed form") {
    const RadioParams radio = noiseless_radio();
    const double value = coverage_exact(kLam, kLam, 1.0, radio);
    CHECK(value == doctest::Approx(1.0 / (1.0 + kPi / 4.0)).epsilon(1e-9));
    CHECK(value == doctest::Approx(0.56009915351201994).epsilon(1e-9));
}

TEST_CASE("coverage_exact tends to one as the threshold vanishes") {
    const RadioParams radio = noiseless_radio();
    CHECK(coverage_exact(kLam, kLam, 1e-12, radio) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("coverage_exact stays within [0, 1] across random inputs") {
    testgen::Rand rand(2024);
    for (int i = 0; i < 200; ++i) {
        const double lam_a = rand.uniform(1e-7, 1e-3);
        const double lam_i = lam_a * rand.uniform(1.0, 5.0);
        const double t = rand.uniform(0.01, 100.0);
        RadioParams radio = baseline_radio();
        radio.alpha = rand.uniform(2.5, 5.5);
        const double value = coverage_exact(lam_a, lam_i, t, radio);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0 + 1e-12);
    }
}

TEST_CASE("coverage_approx equals the exact integral when noise is zero") {
    const RadioParams radio = noiseless_radio();
    const double approx = coverage_approx(kLam, kLam, 1.0, radio);
    const double beta = beta_rayleigh(1.0, 4.0);
    CHECK(approx == doctest::Approx(1.0 / beta).epsilon(1e-12));
    CHECK(approx == doctest::Approx(coverage_exact(kLam, kLam, 1.0, radio)).epsilon(1e-9));
}

TEST_CASE("coverage_approx vanishes with the serving intensity") {
    const RadioParams radio = baseline_radio();
    CHECK(coverage_approx(0.0, kLam, 10.0, radio) == 0.0);
    CHECK(coverage_approx(1e-300, kLam, 10.0, radio) < 1e-200);
}

TEST_CASE("coverage_approx within 5% of exact at the baseline operating point") {
    const RadioParams radio = baseline_radio();
    for (double t_db : {-10.0, 0.0, 10.0, 20.0}) {
        const double t = db_to_linear(t_db);
        const double exact = coverage_exact(kLam, 2.0 * kLam, t, radio);
        const double approx = coverage_approx(kLam, 2.0 * kLam, t, radio);
        CHECK(std::abs(approx - exact) <= 0.05 * exact);
    }
}

TEST_CASE("A and A1 coefficient forms are algebraically identical") {
    testgen::Rand rand(99);
    for (int i = 0; i < 500; ++i) {
        const double lam0 = rand.uniform(1e-7, 1e-2);
        const double lamk = rand.uniform(0.0, 1e-2);
        const double beta = rand.uniform(1.0, 50.0);
        const double a_form = kPi * ((lam0 + lamk) * (beta - 1.0) + lam0);
        const double a1_form = kPi * ((lam0 + lamk) * beta - lamk);
        CHECK(std::abs(a_form - a1_form) <= 1e-12 * a_form);
    }
}

TEST_CASE("coverage_band reduces to the single-operator value without a tenant") {
    SharingScenario s = two_band_scenario(0.0, noiseless_radio());
    const double value = coverage_band(s, "L1", 1.0, CoverageMethod::exact_integral);
    CHECK(value == doctest::Approx(0.56009915351201994).epsilon(1e-6));
}

TEST_CASE("coverage_band with an equal-intensity tenant hits 1/(2 beta - 1)") {
    SharingScenario s = two_band_scenario(10.0, noiseless_radio());
    const double value = coverage_band(s, "L1", 1.0, CoverageMethod::exact_integral);
    CHECK(value == doctest::Approx(0.38898452964805518).epsilon(1e-6));
    // identical bands give identical values
    const double other = coverage_band(s, "L2", 1.0, CoverageMethod::exact_integral);
    CHECK(value == other);
}

TEST_CASE("coverage_band rejects unknown and unpurchased bands") {
    SharingScenario s = two_band_scenario(10.0, baseline_radio());
    CHECK_THROWS_AS(coverage_band(s, "L7", 1.0, CoverageMethod::closed_form),
                    UnknownBandError);
    s.bands[1].purchased = false;
    CHECK_THROWS_AS(coverage_band(s, "L2", 1.0, CoverageMethod::closed_form), ConfigError);
}

TEST_CASE("coverage_total sums purchased bands and never clamps") {
    SharingScenario s = two_band_scenario(0.0, noiseless_radio());
    const CoverageReport two = coverage_total(s, 1.0, CoverageMethod::exact_integral);
    CHECK(two.per_band.size() == 2);
    CHECK(two.aggregate ==
          doctest::Approx(two.per_band[0].second + two.per_band[1].second).epsilon(1e-15));
    // aggregate exceeds one: 2/beta at T = 1
    CHECK(two.aggregate == doctest::Approx(1.1201983070240399).epsilon(1e-6));
    CHECK(two.aggregate > 1.0);

    s.bands[1].purchased = false;
    const CoverageReport one = coverage_total(s, 1.0, CoverageMethod::exact_integral);
    CHECK(one.per_band.size() == 1);
    CHECK(one.aggregate == one.per_band[0].second);

    s.bands[0].purchased = false;
    CHECK_THROWS_AS(coverage_total(s, 1.0, CoverageMethod::exact_integral), ConfigError);
}

TEST_CASE("two identical purchased bands double the aggregate") {
    SharingScenario s = two_band_scenario(10.0, baseline_radio());
    const CoverageReport report = coverage_total(s, 10.0, CoverageMethod::closed_form);
    CHECK(report.aggregate ==
          doctest::Approx(2.0 * report.per_band[0].second).epsilon(1e-15));
}

TEST_CASE("interference-limited coverage matches its closed-form constants") {
    for (auto [ratio, expected] : {std::pair{0.0, 0.56009915351201994},
                                   std::pair{0.5, 0.45911632377836455},
                                   std::pair{1.0, 0.38898452964805518},
                                   std::pair{2.0, 0.29795651084132676}}) {
        SharingScenario s = two_band_scenario(10.0 * ratio, noiseless_radio());
        s.radio.sinr_threshold_db = 0.0;
        const CoverageReport report = coverage_interference_limited(s);
        CHECK(std::abs(report.per_band[0].second - expected) <= 1e-9);
    }
}

TEST_CASE("interference-limited coverage vanishes under an overwhelming tenant") {
    SharingScenario s = two_band_scenario(10.0 * 1e7, noiseless_radio());
    const CoverageReport report = coverage_interference_limited(s);
    CHECK(report.per_band[0].second < 1e-6);
}

TEST_CASE("exact integral converges to the interference-limited value as noise fades") {
    SharingScenario s = two_band_scenario(10.0, baseline_radio());
    const double t = s.radio.sinr_threshold_lin();
    const double il = coverage_interference_limited(s).per_band[0].second;
    double prev_gap = 1.0;
    for (double scale_exp : {0.0, -4.0, -8.0, -12.0}) {
        SharingScenario scaled = s;
        scaled.radio.noise_dbm = -150.0 + 10.0 * scale_exp;
        const double exact = coverage_band(scaled, "L1", t, CoverageMethod::exact_integral);
        const double gap = std::abs(exact - il);
        CHECK(gap <= prev_gap + 1e-15);
        prev_gap = gap;
    }
    // sigma^2 scaled by 10^-12 from the baseline: agreement to 1e-6 and better
    SharingScenario tiny = s;
    tiny.radio.noise_dbm = -270.0;
    CHECK(std::abs(coverage_band(tiny, "L1", t, CoverageMethod::exact_integral) - il) <= 1e-6);
}

TEST_CASE("coverage trends match the figure directions") {
    const RadioParams radio = baseline_radio();

    // non-increasing in the threshold
    double prev = 1.0;
    for (double t_db = -10.0; t_db <= 20.0; t_db += 2.5) {
        const double cur = coverage_exact(kLam, 2.0 * kLam, db_to_linear(t_db), radio);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }

    // non-increasing in tenant intensity, non-decreasing in buyer intensity
    double prev_tenant = 1.0;
    for (double tenants : {0.0, 5.0, 10.0, 20.0, 50.0}) {
        const double lam_k = tenants / (kPi * 500.0 * 500.0);
        const double cur = coverage_exact(kLam, kLam + lam_k, 10.0, radio);
        CHECK(cur <= prev_tenant + 1e-12);
        prev_tenant = cur;
    }
    double prev_buyer = 0.0;
    for (double buyers : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
        const double lam0 = buyers / (kPi * 500.0 * 500.0);
        const double cur = coverage_exact(lam0, lam0 + kLam, 10.0, radio);
        CHECK(cur >= prev_buyer - 1e-12);
        prev_buyer = cur;
    }
}
