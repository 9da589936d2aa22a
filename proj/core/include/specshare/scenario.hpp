#ifndef SPECSHARE_SCENARIO_HPP
#define SPECSHARE_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "specshare/errors.hpp"
#include "specshare/units.hpp"

namespace specshare {

/// Physical-layer constants shared by every SBS in the market.
struct RadioParams {
    double alpha = 4.0;              ///< path-loss exponent, > 2
    double tx_power_dbm = 10.0;      ///< transmit power p
    double max_power_dbm = 10.0;     ///< p_max
    double noise_dbm = -150.0;       ///< noise variance sigma^2
    double sinr_threshold_db = 10.0; ///< reporting threshold T

    double tx_power_w() const { return dbm_to_watts(tx_power_dbm); }
    double noise_w() const { return dbm_to_watts(noise_dbm); }
    double sinr_threshold_lin() const { return db_to_linear(sinr_threshold_db); }

    bool operator==(const RadioParams&) const = default;
};

/// One licensed subband. At most one tenant operator occupies a band, so the
/// tenant is a pair of scalars rather than a list.
struct SubBand {
    std::string id;
    double cost = 0.0;              ///< q per band, currency units
    double tenant_count = 0.0;      ///< tenant SBSs per region disk (config units)
    double tenant_intensity = 0.0;  ///< tenant SBSs per m^2 (derived)
    double tenant_activity = 1.0;   ///< nu in [0, 1]
    bool purchased = true;

    bool operator==(const SubBand&) const = default;
};

/// Full input to every analysis: buyer deployment, band market, radio
/// constants and the region geometry used for count<->intensity conversion
/// and Monte Carlo sampling. Immutable after load.
struct SharingScenario {
    double buyer_count = 0.0;      ///< buyer SBSs per region disk (config units)
    double buyer_intensity = 0.0;  ///< buyer SBSs per m^2 (derived)
    std::vector<SubBand> bands;
    RadioParams radio;
    double region_radius_m = 500.0;

    const SubBand& band(std::string_view band_id) const;
    std::size_t band_index(std::string_view band_id) const;
    std::vector<const SubBand*> purchased_bands() const;

    bool operator==(const SharingScenario&) const = default;
};

struct QosTargets {
    double epsilon = 0.1;       ///< coverage slack, in (0, 1)
    double min_rate_nats = 0.0; ///< R_min, nats per unit bandwidth

    bool operator==(const QosTargets&) const = default;
};

/// Monte Carlo estimation settings (the sampling region radius mirrors the
/// scenario's). horizon_factor scales the interference sampling disk; see
/// montecarlo.hpp.
struct McConfig {
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    double region_radius_m = 500.0;
    double confidence = 0.95;
    double horizon_factor = 8.0;
    int max_workers = 0;  ///< 0 = hardware concurrency

    bool operator==(const McConfig&) const = default;
};

/// Everything a scenario file carries.
struct ScenarioFile {
    SharingScenario scenario;
    QosTargets qos;
    McConfig mc;

    bool operator==(const ScenarioFile&) const = default;
};

/// Net SBS intensity a typical buyer UE can associate with on a band: the
/// buyer serves its UEs with its own infrastructure, so this is the buyer
/// intensity for every purchased band.
double association_intensity(const SharingScenario& s, std::string_view band_id);

/// Intensity of interfering SBSs on a band: buyer plus activity-thinned
/// tenant, lambda_0 + nu * lambda_k.
double interference_intensity(const SharingScenario& s, std::string_view band_id);

/// Parse and validate a scenario JSON document. Unit conversions (dBm -> W,
/// counts -> per-m^2 intensity) happen here; errors name the offending field.
ScenarioFile parse_scenario(const std::string& json_text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario: emits the same schema (round-trips exactly).
std::string serialize_scenario(const ScenarioFile& file);

} // namespace specshare

#endif
