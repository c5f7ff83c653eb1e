#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dimer {

enum class Basis { exciton, site };

std::string_view to_string(Basis b);

/// Density matrix of the dimer restricted to the vacuum plus one excitation.
///
/// Index 0 is the vacuum in both bases; indices 1 and 2 are {|e1>, |e2>} in
/// the exciton basis and {|1>, |2>} in the site basis.
struct OneExcitationState {
  Basis basis = Basis::exciton;
  Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();
};

struct StateDiagnostics {
  double hermiticity_error = 0.0;  // max |rho - rho^+|
  double trace_error = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;

  bool physical(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_tol = 1e-10) const {
    return hermiticity_error <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= -eig_tol;
  }
};

StateDiagnostics diagnose(const OneExcitationState& s);

/// Pure state built from amplitudes over (vacuum, 1, 2) of the given basis.
OneExcitationState pure_state(Basis basis, const Eigen::Vector3cd& amplitudes);

/// Largest elementwise modulus of a - b. Both states must share a basis.
double sup_norm_distance(const OneExcitationState& a, const OneExcitationState& b);

struct EvolutionParams {
  double gamma = 0.0;        // fs^-1
  double nbar0 = 0.0;
  double omega_plus = 0.0;   // cm^-1
  double omega_minus = 0.0;  // cm^-1
  double phi0 = 0.0;         // rad, for site-basis conversion

  double omega0() const { return omega_plus - omega_minus; }
  void validate() const;
};

OneExcitationState to_site_basis(const OneExcitationState& s, double phi0);
OneExcitationState from_site_basis(const OneExcitationState& s, double phi0);
OneExcitationState in_basis(const OneExcitationState& s, Basis target, double phi0);

/// Closed-form solution of the one-excitation master equation.
///
/// Vacuum population is frozen; vacuum coherences rotate at w+ and w- while
/// decaying at gamma(1+n)/2 and gamma n/2; exciton populations relax at
/// gamma(1+2n) towards the ratio n/(n+1); the inter-exciton coherence decays at
/// gamma(1+2n)/2 and rotates at -w0. Site-basis input is converted, evolved and
/// returned in the site basis. Throws DomainError for t < 0 or an unphysical
/// initial state.
OneExcitationState analytic_evolve(const OneExcitationState& rho0, double t, const EvolutionParams& p);

/// The map rho -> -K rho in the exciton basis: -i[H, rho] plus the thermal
/// dissipator with L+ = |e1><e2| at rate gamma n and L- = |e2><e1| at rate
/// gamma (n + 1). H = diag(0, w+, w-) in rad/fs.
class LindbladGenerator {
 public:
  explicit LindbladGenerator(const EvolutionParams& p);

  Eigen::Matrix3cd operator()(const Eigen::Matrix3cd& rho) const;

  /// Step bound 0.1 min(1/(gamma(1+2n)), 1/max|w|) in fs; +inf when both rates vanish.
  double max_step() const;

 private:
  Eigen::Vector3d energies_;  // rad/fs
  double up_rate_;            // gamma n
  double down_rate_;          // gamma (n + 1)
};

/// Default step of the fixed-step oracle, fs.
inline constexpr double kDefaultStep = 0.01;

/// Classical RK4 integration of d(rho)/dt = -K rho up to time t. The step is
/// shrunk to t/ceil(t/dt) so the final time is hit exactly; the state is
/// re-Hermitized after every step. Throws StepSizeError when dt exceeds
/// LindbladGenerator::max_step().
OneExcitationState numeric_evolve(const OneExcitationState& rho0, double t, double dt,
                                  const EvolutionParams& p);

/// States at each of `times` (non-decreasing, >= 0), in the basis of rho0.
std::vector<OneExcitationState> analytic_trajectory(const OneExcitationState& rho0,
                                                    std::span<const double> times,
                                                    const EvolutionParams& p);

/// Same as analytic_trajectory but integrated with numeric_evolve, continuing
/// from the previous output time.
std::vector<OneExcitationState> numeric_trajectory(const OneExcitationState& rho0,
                                                   std::span<const double> times, double dt,
                                                   const EvolutionParams& p);

}  // namespace dimer
