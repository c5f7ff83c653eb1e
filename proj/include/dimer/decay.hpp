#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dimer/exciton.hpp"

namespace dimer {

/// One discrete phonon mode used in the principal-value frequency shifts.
struct BathMode {
  double omega = 0.0;      // cm^-1
  double coupling2 = 0.0;  // |V_k|^2 in cm^-2
};

struct BathSpec {
  double temperature = 300.0;  // K
  double gamma_d = 0.0;        // site dephasing rate, fs^-1
  std::vector<BathMode> modes;

  void validate() const;
};

struct RateSet {
  double alpha = 0.0;
  double gamma = 0.0;          // fs^-1
  double nbar0 = 0.0;
  double inverse_alpha = 0.0;  // +inf when alpha == 0
  std::optional<double> lifetime;  // 1/gamma in fs; empty when gamma == 0
};

/// Bose-Einstein occupation 1/(exp(w0/kT) - 1). Returns 0 at T == 0.
/// Throws DomainError for omega0 <= 0 or T < 0.
double bose_occupation(double omega0, double temperature);

/// alpha = (|eta| J12 / omega0)^2 with omega0 the renormalized exciton splitting.
double attenuation_factor(const DimerParams& p);

/// gamma = alpha * gamma_d.
double decay_constant(double alpha, double gamma_d);

/// Collects alpha, gamma and the thermal occupation at the exciton resonance.
RateSet rate_set(const DimerParams& p, const BathSpec& bath);

/// Weak-coupling limit 1/alpha -> (gap0 / J12)^2 / |eta|^2.
double limit_inverse_alpha(double eta_abs, double gap0, double J12);

/// Attenuation of a regular helix, ((a/v) J12)^2 with J12 taken as an angular
/// frequency. Inputs in angstrom, m/s and cm^-1.
double helix_attenuation(double spacing_angstrom, double speed_m_per_s, double J12);

struct Reorganization {
  double lambda2 = 0.0;
  bool unphysical = false;  // lambda2 < 0
};

/// lambda2 = lambda1 (1 + |eta| (2 cos(theta) + |eta|)).
Reorganization lambda2_from_eta(double lambda1, double eta_abs, double theta);

struct FrequencyShift {
  double delta_plus = 0.0;   // cm^-1
  double delta_minus = 0.0;  // cm^-1
};

/// Principal-value shifts of the exciton frequencies from a discrete mode list:
///   d+ =  sum |V_k|^2 (n_k + 1) / (w_k - w0)
///   d- = -sum |V_k|^2 n_k / (w_k - w0)
/// The renormalized frequencies are w+ - d+ and w- - d-.
/// A mode exactly at omega0 throws ResonantModeError.
FrequencyShift frequency_renormalization(std::span<const BathMode> modes, double omega0,
                                         double temperature);

}  // namespace dimer
