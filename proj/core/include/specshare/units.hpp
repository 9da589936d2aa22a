#ifndef SPECSHARE_UNITS_HPP
#define SPECSHARE_UNITS_HPP

#include <cmath>

namespace specshare {

// dB/dBm exist only at the config and reporting boundary; everything inside
// the library works in linear watts and linear SINR.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline constexpr double kNatsPerBit = 0.69314718055994530942;  // ln 2

} // namespace specshare

#endif
