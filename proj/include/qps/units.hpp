#pragma once

// Unit conventions used throughout:
//   - time in microseconds (us)
//   - angular frequencies in rad/us
//   - configuration files and Table-style inputs carry couplings as A/2pi in kHz
// Conversion between the two happens in exactly one place (khz_to_rad_us).

namespace qps {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// A/2pi in kHz -> angular frequency in rad/us.
inline constexpr double khz_to_rad_us(double khz) { return two_pi * khz * 1e-3; }

/// angular frequency in rad/us -> A/2pi in kHz.
inline constexpr double rad_us_to_khz(double w) { return w / two_pi * 1e3; }

inline constexpr const char* version_string = "0.1.0";

}  // namespace qps
