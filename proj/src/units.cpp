#include "dimer/units.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer::units {

double wavenumber_to_angular(double wavenumber) { return kAngularPerWavenumber * wavenumber; }

double angular_to_wavenumber(double angular) { return angular / kAngularPerWavenumber; }

double thermal_energy(double kelvin) {
  if (!(kelvin > 0.0) || !std::isfinite(kelvin))
    throw DomainError("thermal_energy: temperature must be positive and finite");
  return kBoltzmannCm1PerK * kelvin;
}

double temperature_from_energy(double wavenumber) {
  if (!(wavenumber > 0.0) || !std::isfinite(wavenumber))
    throw DomainError("temperature_from_energy: energy must be positive and finite");
  return wavenumber / kBoltzmannCm1PerK;
}

double transit_time(double spacing_angstrom, double speed_m_per_s) {
  if (!(spacing_angstrom > 0.0) || !(speed_m_per_s > 0.0))
    throw DomainError("transit_time: spacing and speed must be positive");
  // 1 angstrom = 1e-10 m, 1 s = 1e15 fs
  return spacing_angstrom * 1e5 / speed_m_per_s;
}

}  // namespace dimer::units
