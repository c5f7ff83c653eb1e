#pragma once

#include <complex>

#include <Eigen/Dense>

namespace dimer {

/// Physical input of the dimer: two coupled sites dressed by a phonon bath.
///
/// Site 1 is the higher-energy site. The site asymmetry eta = |eta| e^{i theta}
/// is kept in polar form since every quantity downstream depends on |eta| and
/// cos(theta) only.
struct DimerParams {
  double omega1 = 0.0;   // bare site energy, cm^-1
  double omega2 = 0.0;   // cm^-1
  double J12 = 0.0;      // intersite coupling, cm^-1 (signed)
  double lambda1 = 0.0;  // reorganization energy of site 1, cm^-1
  double eta_abs = 0.0;  // |eta|
  double theta = 0.0;    // arg(eta) in [0, pi]

  /// Builds params from a Cartesian eta. theta is taken as |arg(eta)|.
  static DimerParams from_complex_eta(double omega1, double omega2, double J12, double lambda1,
                                      std::complex<double> eta);

  double bare_gap() const { return omega1 - omega2; }

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

/// Folds any real angle onto [0, pi] using the reflection symmetry theta -> -theta.
/// Negative zero maps to +0.
double fold_theta(double theta);

/// w'_1 - w'_2 = (w1 - w2) + 2 lambda1 |eta| (2 cos(theta) + |eta|).
double renormalized_gap(const DimerParams& p);

/// Diagonalizing angle phi0 = arctan(-2 J12 / gap) on [-pi/2, pi/2].
/// For gap == 0 the result is +-pi/2 with the sign of -J12.
/// Throws DegenerateDimerError when gap == J12 == 0.
double mixing_angle(double gap, double J12);

struct ExcitonPair {
  double plus = 0.0;
  double minus = 0.0;
};

/// Eigenfrequencies of the 2x2 dimer Hamiltonian.
///
/// Also evaluates the trigonometric form in terms of phi0 and checks that it
/// yields the same pair (as a set) to 1e-10 relative; a mismatch throws
/// std::logic_error.
ExcitonPair exciton_frequencies(double omega1p, double omega2p, double J12);

struct ExcitonFrame {
  double omega1p = 0.0;
  double omega2p = 0.0;
  double phi0 = 0.0;
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double omega0 = 0.0;
  /// Renormalization pushed site 2 above site 1 (w'_1 < w'_2). The mixing
  /// angle branch then pairs exciton 1 with the lower eigenvalue.
  bool inverted = false;
};

ExcitonFrame exciton_frame(const DimerParams& p);

/// Rotation by phi0/2 between exciton and site coordinates in the one-excitation
/// subspace. Row i of `exciton_to_site` holds the exciton amplitudes of site |i>:
/// |1> = cos|e1> + sin|e2>,  |2> = -sin|e1> + cos|e2>.
struct BasisMap {
  Eigen::Matrix2d exciton_to_site;
  Eigen::Matrix2d site_to_exciton;
};

BasisMap basis_map(double phi0);

/// Residuals of the SU(2) rotation identities on the one-excitation subspace,
/// with L0 = I/2 and L_k = sigma_k / 2 and U = exp(-i phi L2).
struct Su2Residuals {
  double l1_rotation = 0.0;   // |U L1 U^+ - (L1 cos - L3 sin)|_max
  double l3_rotation = 0.0;   // |U L3 U^+ - (L1 sin + L3 cos)|_max
  double l0_invariance = 0.0;
  double l2_invariance = 0.0;

  double max() const;
};

Su2Residuals su2_identity_check(double phi);

/// Rotates (w'_1+w'_2) L0 + (w'_1-w'_2) L3 + 2 J12 L1 by phi0.
struct DiagonalizationCheck {
  double phi0 = 0.0;
  double off_diagonal = 0.0;           // |(U H U^+)_12|
  Eigen::Vector2d diagonal = Eigen::Vector2d::Zero();  // (U H U^+)_11, _22
  ExcitonPair expected;                 // from exciton_frequencies
  double max_relative_error = 0.0;      // diagonal vs expected
};

DiagonalizationCheck diagonalization_check(double omega1p, double omega2p, double J12);

}  // namespace dimer
