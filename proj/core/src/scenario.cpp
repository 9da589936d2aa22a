#include "specshare/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace specshare {

namespace {

using nlohmann::json;

double disk_area(double radius_m) { return std::numbers::pi * radius_m * radius_m; }

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError(field + ": " + why);
}

double require_number(const json& obj, const std::string& field, const std::string& ctx) {
    if (!obj.contains(field)) fail(ctx + field, "missing required field");
    const json& v = obj.at(field);
    if (!v.is_number()) fail(ctx + field, "expected a number");
    return v.get<double>();
}

void validate(const ScenarioFile& f) {
    const RadioParams& r = f.scenario.radio;
    if (!(r.alpha > 2.0)) fail("radio.alpha", "path-loss exponent must be > 2");
    if (r.tx_power_dbm > r.max_power_dbm) {
        fail("radio.tx_power_dbm", "transmit power exceeds max_power_dbm");
    }
    if (!(f.scenario.region_radius_m > 0.0)) fail("buyer.region_radius_m", "must be > 0");
    if (!(f.scenario.buyer_intensity > 0.0)) fail("buyer.intensity_count", "must be > 0");
    if (f.scenario.bands.empty()) fail("bands", "at least one band is required");
    for (std::size_t i = 0; i < f.scenario.bands.size(); ++i) {
        const SubBand& band = f.scenario.bands[i];
        const std::string ctx = "bands[" + std::to_string(i) + "].";
        if (band.id.empty()) fail(ctx + "id", "must be non-empty");
        if (band.cost < 0.0) fail(ctx + "cost", "must be >= 0");
        if (band.tenant_count < 0.0) fail(ctx + "tenant_count", "must be >= 0");
        if (band.tenant_activity < 0.0 || band.tenant_activity > 1.0) {
            fail(ctx + "tenant_activity", "must be within [0, 1]");
        }
        for (std::size_t j = i + 1; j < f.scenario.bands.size(); ++j) {
            if (f.scenario.bands[j].id == band.id) {
                fail("bands[" + std::to_string(j) + "].id", "duplicate band id '" + band.id + "'");
            }
        }
    }
    if (!(f.qos.epsilon > 0.0 && f.qos.epsilon < 1.0)) fail("qos.epsilon", "must be in (0, 1)");
    if (f.qos.min_rate_nats < 0.0) fail("qos.min_rate_nats", "must be >= 0");
    if (f.mc.trials < 1) fail("montecarlo.trials", "must be >= 1");
    if (!(f.mc.confidence > 0.0 && f.mc.confidence < 1.0)) {
        fail("montecarlo.confidence", "must be in (0, 1)");
    }
    if (!(f.mc.horizon_factor >= 1.0)) fail("montecarlo.horizon_factor", "must be >= 1");
}

} // namespace

const SubBand& SharingScenario::band(std::string_view band_id) const {
    return bands[band_index(band_id)];
}

std::size_t SharingScenario::band_index(std::string_view band_id) const {
    for (std::size_t i = 0; i < bands.size(); ++i) {
        if (bands[i].id == band_id) return i;
    }
    throw UnknownBandError(std::string(band_id));
}

std::vector<const SubBand*> SharingScenario::purchased_bands() const {
    std::vector<const SubBand*> out;
    for (const SubBand& b : bands) {
        if (b.purchased) out.push_back(&b);
    }
    return out;
}

double association_intensity(const SharingScenario& s, std::string_view band_id) {
    s.band(band_id);  // existence check
    return s.buyer_intensity;
}

double interference_intensity(const SharingScenario& s, std::string_view band_id) {
    const SubBand& b = s.band(band_id);
    return s.buyer_intensity + b.tenant_activity * b.tenant_intensity;
}

ScenarioFile parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario parse error: ") + e.what());
    }

    ScenarioFile out;
    if (!doc.contains("radio")) fail("radio", "missing required section");
    const json& radio = doc.at("radio");
    out.scenario.radio.alpha = require_number(radio, "alpha", "radio.");
    out.scenario.radio.tx_power_dbm = require_number(radio, "tx_power_dbm", "radio.");
    out.scenario.radio.max_power_dbm = require_number(radio, "max_power_dbm", "radio.");
    out.scenario.radio.noise_dbm = require_number(radio, "noise_dbm", "radio.");
    out.scenario.radio.sinr_threshold_db = require_number(radio, "sinr_threshold_db", "radio.");

    if (!doc.contains("buyer")) fail("buyer", "missing required section");
    const json& buyer = doc.at("buyer");
    out.scenario.buyer_count = require_number(buyer, "intensity_count", "buyer.");
    out.scenario.region_radius_m = require_number(buyer, "region_radius_m", "buyer.");
    if (out.scenario.region_radius_m > 0.0) {
        out.scenario.buyer_intensity =
            out.scenario.buyer_count / disk_area(out.scenario.region_radius_m);
    }

    if (!doc.contains("bands") || !doc.at("bands").is_array()) {
        fail("bands", "missing required array");
    }
    std::size_t idx = 0;
    for (const json& jb : doc.at("bands")) {
        const std::string ctx = "bands[" + std::to_string(idx) + "].";
        SubBand band;
        if (!jb.contains("id") || !jb.at("id").is_string()) fail(ctx + "id", "expected a string");
        band.id = jb.at("id").get<std::string>();
        band.cost = require_number(jb, "cost", ctx);
        band.tenant_count = require_number(jb, "tenant_count", ctx);
        band.tenant_activity = require_number(jb, "tenant_activity", ctx);
        if (jb.contains("purchased")) {
            if (!jb.at("purchased").is_boolean()) fail(ctx + "purchased", "expected a boolean");
            band.purchased = jb.at("purchased").get<bool>();
        }
        if (out.scenario.region_radius_m > 0.0) {
            band.tenant_intensity = band.tenant_count / disk_area(out.scenario.region_radius_m);
        }
        out.scenario.bands.push_back(std::move(band));
        ++idx;
    }

    if (!doc.contains("qos")) fail("qos", "missing required section");
    out.qos.epsilon = require_number(doc.at("qos"), "epsilon", "qos.");
    out.qos.min_rate_nats = require_number(doc.at("qos"), "min_rate_nats", "qos.");

    out.mc.region_radius_m = out.scenario.region_radius_m;
    if (doc.contains("montecarlo")) {
        const json& mc = doc.at("montecarlo");
        if (mc.contains("trials")) {
            if (!mc.at("trials").is_number_integer()) fail("montecarlo.trials", "expected an integer");
            out.mc.trials = mc.at("trials").get<std::int64_t>();
        }
        if (mc.contains("seed")) {
            if (!mc.at("seed").is_number_unsigned() && !mc.at("seed").is_number_integer()) {
                fail("montecarlo.seed", "expected an integer");
            }
            out.mc.seed = mc.at("seed").get<std::uint64_t>();
        }
        if (mc.contains("confidence")) out.mc.confidence = require_number(mc, "confidence", "montecarlo.");
        if (mc.contains("horizon_factor")) {
            out.mc.horizon_factor = require_number(mc, "horizon_factor", "montecarlo.");
        }
    }

    validate(out);
    return out;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioFile& file) {
    json doc;
    doc["radio"] = {{"alpha", file.scenario.radio.alpha},
                    {"tx_power_dbm", file.scenario.radio.tx_power_dbm},
                    {"max_power_dbm", file.scenario.radio.max_power_dbm},
                    {"noise_dbm", file.scenario.radio.noise_dbm},
                    {"sinr_threshold_db", file.scenario.radio.sinr_threshold_db}};
    doc["buyer"] = {{"intensity_count", file.scenario.buyer_count},
                    {"region_radius_m", file.scenario.region_radius_m}};
    doc["bands"] = json::array();
    for (const SubBand& b : file.scenario.bands) {
        doc["bands"].push_back({{"id", b.id},
                                {"cost", b.cost},
                                {"tenant_count", b.tenant_count},
                                {"tenant_activity", b.tenant_activity},
                                {"purchased", b.purchased}});
    }
    doc["qos"] = {{"epsilon", file.qos.epsilon}, {"min_rate_nats", file.qos.min_rate_nats}};
    doc["montecarlo"] = {{"trials", file.mc.trials},
                         {"seed", file.mc.seed},
                         {"confidence", file.mc.confidence},
                         {"horizon_factor", file.mc.horizon_factor}};
    return doc.dump(2) + "\n";
}

} // namespace specshare
