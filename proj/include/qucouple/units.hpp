#pragma once

#include <cmath>
#include <string_view>

#include "qucouple/errors.hpp"

namespace qucouple::units {

// CODATA 2018 exact values.
inline constexpr double kPlanck = 6.62607015e-34;   // J s
inline constexpr double kBoltzmann = 1.380649e-23;  // J / K

inline constexpr std::string_view kTemperatureCaveat =
    "T' = hbar omega / (k_B T) with omega = 2 pi f; the relation is dimensionally "
    "ambiguous, treat the value as a scale estimate";

/// hbar (2 pi f) / (k_B t) in millikelvin, f in GHz, t the dimensionless
/// temperature.
inline double to_physical_temperature(double t_dimensionless, double reference_frequency_ghz) {
  if (!(t_dimensionless > 0.0) || !(reference_frequency_ghz > 0.0) ||
      !std::isfinite(t_dimensionless) || !std::isfinite(reference_frequency_ghz))
    throw DomainError("temperature and reference frequency must be positive");
  const double kelvin = kPlanck * reference_frequency_ghz * 1e9 / (kBoltzmann * t_dimensionless);
  return kelvin * 1e3;
}

} // namespace qucouple::units
