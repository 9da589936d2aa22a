#ifndef SPECSHARE_ERRORS_HPP
#define SPECSHARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specshare {

/// Scenario file could not be parsed or violates a model invariant.
/// The message names the offending field (e.g. "bands[1].tenant_activity").
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownBandError : public ConfigError {
public:
    explicit UnknownBandError(const std::string& band_id)
        : ConfigError("unknown band id: " + band_id), band_id_(band_id) {}
    const std::string& band_id() const noexcept { return band_id_; }

private:
    std::string band_id_;
};

/// A numerical routine could not reach the requested tolerance.
/// Carries the best estimate together with a bound on its error.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Series evaluation exceeded its term cap without converging.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace specshare

#endif
