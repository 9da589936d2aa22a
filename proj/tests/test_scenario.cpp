#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specshare/scenario.hpp"

using namespace specshare;

namespace {

std::string baseline_json(const std::string& patch_field = "", double patch_value = 0.0) {
    // Hand-rolled so individual fields can be broken for validation tests.
    double alpha = 4.0, activity = 1.0;
    if (patch_field == "alpha") alpha = patch_value;
    if (patch_field == "tenant_activity") activity = patch_value;
    std::string json = R"({
      "radio": {"alpha": )" + std::to_string(alpha) + R"(,
                "tx_power_dbm": 10.0, "max_power_dbm": 10.0,
                "noise_dbm": -150.0, "sinr_threshold_db": 10.0},
      "buyer": {"intensity_count": 10, "region_radius_m": 500.0},
      "bands": [
        {"id": "L1", "cost": 1.0, "tenant_count": 10, "tenant_activity": )" +
                       std::to_string(activity) + R"(},
        {"id": "L2", "cost": 1.0, "tenant_count": 10, "tenant_activity": 1.0}
      ],
      "qos": {"epsilon": 0.1, "min_rate_nats": 0.5},
      "montecarlo": {"trials": 2000, "seed": 7, "confidence": 0.95}
    })";
    return json;
}

} // namespace

TEST_CASE("unit conversions are exact at the spec anchors") {
    CHECK(dbm_to_watts(0.0) == 1e-3);
    CHECK(db_to_linear(10.0) == 10.0);
    CHECK(dbm_to_watts(10.0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(linear_to_db(db_to_linear(-7.3)) == doctest::Approx(-7.3).epsilon(1e-12));
}

TEST_CASE("baseline scenario loads with converted units") {
    const ScenarioFile f = parse_scenario(baseline_json());
    CHECK(f.scenario.bands.size() == 2);
    CHECK(f.scenario.radio.alpha == 4.0);
    CHECK(f.scenario.radio.sinr_threshold_lin() == doctest::Approx(10.0));
    CHECK(f.scenario.radio.tx_power_w() == doctest::Approx(0.01));
    CHECK(f.scenario.radio.noise_w() == doctest::Approx(1e-18));
    const double expected_intensity = 10.0 / (std::numbers::pi * 500.0 * 500.0);
    CHECK(f.scenario.buyer_intensity == doctest::Approx(expected_intensity).epsilon(1e-15));
    CHECK(f.scenario.buyer_intensity == doctest::Approx(1.2732e-5).epsilon(1e-4));
    CHECK(f.scenario.bands[0].tenant_intensity == doctest::Approx(expected_intensity));
    CHECK(f.scenario.bands[0].purchased);
    CHECK(f.qos.epsilon == 0.1);
    CHECK(f.mc.trials == 2000);
    CHECK(f.mc.seed == 7);
    CHECK(f.mc.region_radius_m == 500.0);
}

TEST_CASE("association intensity is the buyer intensity on every band") {
    const ScenarioFile f = parse_scenario(baseline_json());
    const double lam0 = f.scenario.buyer_intensity;
    CHECK(association_intensity(f.scenario, "L1") == lam0);
    CHECK(association_intensity(f.scenario, "L2") == lam0);
    CHECK_THROWS_AS(association_intensity(f.scenario, "nope"), UnknownBandError);
}

TEST_CASE("interference intensity adds the activity-thinned tenant") {
    ScenarioFile f = parse_scenario(baseline_json());
    const double lam0 = f.scenario.buyer_intensity;
    // nu = 1, lam_k = lam_0: doubled intensity
    CHECK(interference_intensity(f.scenario, "L1") == doctest::Approx(2.0 * lam0).epsilon(1e-15));

    f.scenario.bands[0].tenant_activity = 0.0;  // silent tenant
    CHECK(interference_intensity(f.scenario, "L1") == lam0);

    f.scenario.bands[0].tenant_activity = 1.0;
    f.scenario.bands[0].tenant_intensity = 0.0;  // no tenant deployment
    CHECK(interference_intensity(f.scenario, "L1") == lam0);

    CHECK_THROWS_AS(interference_intensity(f.scenario, "L9"), UnknownBandError);
}

TEST_CASE("interference intensity never drops below association intensity") {
    ScenarioFile f = parse_scenario(baseline_json());
    for (double nu : {0.0, 0.25, 0.5, 1.0}) {
        f.scenario.bands[0].tenant_activity = nu;
        CHECK(interference_intensity(f.scenario, "L1") >=
              association_intensity(f.scenario, "L1"));
    }
}

TEST_CASE("validation rejects alpha at the boundary") {
    CHECK_THROWS_WITH_AS(parse_scenario(baseline_json("alpha", 2.0)),
                         doctest::Contains("radio.alpha"), ConfigError);
}

TEST_CASE("validation rejects out-of-range activity") {
    CHECK_THROWS_WITH_AS(parse_scenario(baseline_json("tenant_activity", 1.5)),
                         doctest::Contains("tenant_activity"), ConfigError);
}

TEST_CASE("validation names missing fields and bad JSON") {
    CHECK_THROWS_WITH_AS(parse_scenario("{}"), doctest::Contains("radio"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_scenario("{ not json"), doctest::Contains("parse error"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(R"({"radio": {"alpha": 4.0}, "buyer": {}, "bands": [], "qos": {}})"),
        doctest::Contains("tx_power_dbm"), ConfigError);
}

TEST_CASE("validation rejects duplicate band ids") {
    std::string json = baseline_json();
    const auto pos = json.find("\"L2\"");
    json.replace(pos, 4, "\"L1\"");
    CHECK_THROWS_WITH_AS(parse_scenario(json), doctest::Contains("duplicate"), ConfigError);
}

TEST_CASE("validation rejects tx power above the cap") {
    std::string json = baseline_json();
    const auto pos = json.find("\"tx_power_dbm\": 10.0");
    json.replace(pos, std::string("\"tx_power_dbm\": 10.0").size(), "\"tx_power_dbm\": 20.0");
    CHECK_THROWS_WITH_AS(parse_scenario(json), doctest::Contains("max_power_dbm"), ConfigError);
}

TEST_CASE("validation rejects bad costs, trials and confidence") {
    std::string negative_cost = baseline_json();
    auto pos = negative_cost.find("\"cost\": 1.0");
    negative_cost.replace(pos, std::string("\"cost\": 1.0").size(), "\"cost\": -2.0");
    CHECK_THROWS_WITH_AS(parse_scenario(negative_cost), doctest::Contains("cost"), ConfigError);

    std::string zero_trials = baseline_json();
    pos = zero_trials.find("\"trials\": 2000");
    zero_trials.replace(pos, std::string("\"trials\": 2000").size(), "\"trials\": 0");
    CHECK_THROWS_WITH_AS(parse_scenario(zero_trials), doctest::Contains("trials"), ConfigError);

    std::string bad_conf = baseline_json();
    pos = bad_conf.find("\"confidence\": 0.95");
    bad_conf.replace(pos, std::string("\"confidence\": 0.95").size(), "\"confidence\": 1.5");
    CHECK_THROWS_WITH_AS(parse_scenario(bad_conf), doctest::Contains("confidence"), ConfigError);
}

TEST_CASE("serialize/load round-trips to an identical scenario") {
    const ScenarioFile f = parse_scenario(baseline_json());
    const ScenarioFile again = parse_scenario(serialize_scenario(f));
    CHECK(again == f);
    // and a second hop is byte-stable
    CHECK(serialize_scenario(again) == serialize_scenario(f));
}

TEST_CASE("shipped configs parse") {
    const ScenarioFile baseline = load_scenario(SPECSHARE_CONFIG_DIR "/baseline.json");
    CHECK(baseline.scenario.bands.size() == 2);
    CHECK(baseline.scenario.radio.noise_dbm == -150.0);
    const ScenarioFile market = load_scenario(SPECSHARE_CONFIG_DIR "/market6.json");
    CHECK(market.scenario.bands.size() == 6);
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ConfigError);
}
