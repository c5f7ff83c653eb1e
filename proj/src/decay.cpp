#include "dimer/decay.hpp"

#include <cmath>
#include <limits>

#include "dimer/errors.hpp"
#include "dimer/units.hpp"

namespace dimer {

void BathSpec::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("BathSpec: temperature must be positive");
  if (!(gamma_d >= 0.0) || !std::isfinite(gamma_d))
    throw DomainError("BathSpec: gamma_d must be non-negative");
  for (const BathMode& m : modes) {
    if (!(m.omega > 0.0)) throw DomainError("BathSpec: mode frequencies must be positive");
    if (!(m.coupling2 >= 0.0)) throw DomainError("BathSpec: mode couplings must be non-negative");
  }
}

double bose_occupation(double omega0, double temperature) {
  if (!(omega0 > 0.0)) throw DomainError("bose_occupation: resonance frequency must be positive");
  if (temperature < 0.0) throw DomainError("bose_occupation: negative temperature");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega0 / units::thermal_energy(temperature));
}

double attenuation_factor(const DimerParams& p) {
  const double omega0 = std::hypot(renormalized_gap(p), 2.0 * p.J12);
  if (!(omega0 > 0.0)) throw DomainError("attenuation_factor: exciton splitting vanishes");
  const double ratio = p.eta_abs * p.J12 / omega0;
  return ratio * ratio;
}

double decay_constant(double alpha, double gamma_d) {
  if (alpha < 0.0 || gamma_d < 0.0)
    throw DomainError("decay_constant: alpha and gamma_d must be non-negative");
  return alpha * gamma_d;
}

RateSet rate_set(const DimerParams& p, const BathSpec& bath) {
  RateSet r;
  r.alpha = attenuation_factor(p);
  r.gamma = decay_constant(r.alpha, bath.gamma_d);
  r.nbar0 = bose_occupation(exciton_frame(p).omega0, bath.temperature);
  r.inverse_alpha = r.alpha > 0.0 ? 1.0 / r.alpha : std::numeric_limits<double>::infinity();
  if (r.gamma > 0.0) r.lifetime = 1.0 / r.gamma;
  return r;
}

double limit_inverse_alpha(double eta_abs, double gap0, double J12) {
  if (!(eta_abs > 0.0)) throw DomainError("limit_inverse_alpha: |eta| must be positive");
  if (J12 == 0.0) throw DomainError("limit_inverse_alpha: J12 must be non-zero");
  const double r = gap0 / J12;
  return r * r / (eta_abs * eta_abs);
}

double helix_attenuation(double spacing_angstrom, double speed_m_per_s, double J12) {
  const double x = units::transit_time(spacing_angstrom, speed_m_per_s) * units::wavenumber_to_angular(J12);
  return x * x;
}

Reorganization lambda2_from_eta(double lambda1, double eta_abs, double theta) {
  if (lambda1 < 0.0) throw DomainError("lambda2_from_eta: lambda1 must be non-negative");
  Reorganization r;
  r.lambda2 = lambda1 * (1.0 + eta_abs * (2.0 * std::cos(theta) + eta_abs));
  r.unphysical = r.lambda2 < 0.0;
  return r;
}

FrequencyShift frequency_renormalization(std::span<const BathMode> modes, double omega0,
                                         double temperature) {
  FrequencyShift shift;
  for (const BathMode& m : modes) {
    if (!(m.omega > 0.0)) throw DomainError("frequency_renormalization: mode frequency must be positive");
    const double detuning = m.omega - omega0;
    if (detuning == 0.0)
      throw ResonantModeError("frequency_renormalization: a mode sits exactly on the resonance");
    const double n = bose_occupation(m.omega, temperature);
    shift.delta_plus += m.coupling2 * (n + 1.0) / detuning;
    shift.delta_minus -= m.coupling2 * n / detuning;
  }
  return shift;
}

}  // namespace dimer
