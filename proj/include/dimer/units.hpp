#pragma once

// Internal units: energies and frequencies in cm^-1, time in fs, rates in
// fs^-1, temperature in K, lattice spacings in angstrom, speeds in m/s.
// Phase factors exp(i w t) always take the angular frequency in rad/fs.

#include <numbers>

namespace dimer::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLightCmPerFs = 2.99792458e-5;   // c = 2.99792458e10 cm/s
inline constexpr double kBoltzmannCm1PerK = 0.69503480;         // k_B / (h c)
inline constexpr double kAngularPerWavenumber = 2.0 * kPi * kSpeedOfLightCmPerFs;

/// cm^-1 -> rad/fs.
double wavenumber_to_angular(double wavenumber);
/// rad/fs -> cm^-1.
double angular_to_wavenumber(double angular);

/// k_B T in cm^-1. Throws DomainError for T <= 0.
double thermal_energy(double kelvin);
/// Inverse of thermal_energy. Throws DomainError for non-positive energies.
double temperature_from_energy(double wavenumber);

/// Time in fs for sound to cross a lattice spacing `a` (angstrom) at speed `v` (m/s).
double transit_time(double spacing_angstrom, double speed_m_per_s);

}  // namespace dimer::units
