#pragma once

#include <numbers>

namespace gqfi::constants {

// CODATA 2018, SI units.
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double k_boltzmann = 1.380649e-23;       // J / K
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double proton_mass = 1.67262192369e-27;   // kg
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double pi = std::numbers::pi;

}  // namespace gqfi::constants
