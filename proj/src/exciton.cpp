#include "dimer/exciton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "dimer/decay.hpp"
#include "dimer/errors.hpp"
#include "dimer/units.hpp"

namespace dimer {

using units::kPi;

DimerParams DimerParams::from_complex_eta(double omega1, double omega2, double J12,
                                          double lambda1, std::complex<double> eta) {
  DimerParams p;
  p.omega1 = omega1;
  p.omega2 = omega2;
  p.J12 = J12;
  p.lambda1 = lambda1;
  p.eta_abs = std::abs(eta);
  p.theta = p.eta_abs > 0.0 ? fold_theta(std::arg(eta)) : 0.0;
  return p;
}

void DimerParams::validate() const {
  for (double v : {omega1, omega2, J12, lambda1, eta_abs, theta})
    if (!std::isfinite(v)) throw DomainError("DimerParams: non-finite field");
  if (!(omega1 > omega2)) throw DomainError("DimerParams: omega1 must exceed omega2");
  if (lambda1 < 0.0) throw DomainError("DimerParams: lambda1 must be non-negative");
  if (eta_abs < 0.0) throw DomainError("DimerParams: eta_abs must be non-negative");
  if (theta < 0.0 || theta > kPi) throw DomainError("DimerParams: theta must lie in [0, pi]");
}

double fold_theta(double theta) {
  // remainder() lands on [-pi, pi]; fabs() also turns -0 into +0
  return std::fabs(std::remainder(theta, 2.0 * kPi));
}

double renormalized_gap(const DimerParams& p) {
  return p.bare_gap() + 2.0 * p.lambda1 * p.eta_abs * (2.0 * std::cos(p.theta) + p.eta_abs);
}

double mixing_angle(double gap, double J12) {
  if (gap == 0.0 && J12 == 0.0)
    throw DegenerateDimerError("mixing_angle: zero gap and zero coupling leave the angle undefined");
  if (gap == 0.0) return std::copysign(kPi / 2.0, -J12);
  return std::atan(-2.0 * J12 / gap);
}

namespace {

ExcitonPair trigonometric_pair(double omega1p, double omega2p, double J12, double phi0) {
  const double c2 = std::cos(phi0 / 2.0) * std::cos(phi0 / 2.0);
  const double s2 = std::sin(phi0 / 2.0) * std::sin(phi0 / 2.0);
  return {omega1p * c2 + omega2p * s2 - J12 * std::sin(phi0),
          omega1p * s2 + omega2p * c2 + J12 * std::sin(phi0)};
}

}  // namespace

ExcitonPair exciton_frequencies(double omega1p, double omega2p, double J12) {
  const double mean = 0.5 * (omega1p + omega2p);
  const double half_split = 0.5 * std::hypot(omega1p - omega2p, 2.0 * J12);
  const ExcitonPair pair{mean + half_split, mean - half_split};

  const double gap = omega1p - omega2p;
  if (gap != 0.0 || J12 != 0.0) {
    ExcitonPair trig = trigonometric_pair(omega1p, omega2p, J12, mixing_angle(gap, J12));
    if (trig.plus < trig.minus) std::swap(trig.plus, trig.minus);
    const double scale = std::max({std::fabs(omega1p), std::fabs(omega2p), std::fabs(J12), 1e-300});
    if (std::fabs(trig.plus - pair.plus) > 1e-10 * scale ||
        std::fabs(trig.minus - pair.minus) > 1e-10 * scale)
      throw std::logic_error("exciton_frequencies: trigonometric and closed forms disagree");
  }
  return pair;
}

ExcitonFrame exciton_frame(const DimerParams& p) {
  const double lambda2 = lambda2_from_eta(p.lambda1, p.eta_abs, p.theta).lambda2;
  ExcitonFrame f;
  f.omega1p = p.omega1 - 2.0 * p.lambda1;
  f.omega2p = p.omega2 - 2.0 * lambda2;
  const double gap = renormalized_gap(p);
  f.phi0 = mixing_angle(gap, p.J12);
  const ExcitonPair pair = exciton_frequencies(f.omega1p, f.omega2p, p.J12);
  f.omega_plus = pair.plus;
  f.omega_minus = pair.minus;
  f.omega0 = std::hypot(gap, 2.0 * p.J12);
  f.inverted = gap < 0.0;
  return f;
}

BasisMap basis_map(double phi0) {
  const double c = std::cos(phi0 / 2.0);
  const double s = std::sin(phi0 / 2.0);
  BasisMap m;
  m.exciton_to_site << c, s, -s, c;
  m.site_to_exciton = m.exciton_to_site.transpose();
  return m;
}

namespace {

using Mat2c = Eigen::Matrix2cd;
constexpr std::complex<double> kI{0.0, 1.0};

struct Su2Generators {
  Mat2c L0, L1, L2, L3;
};

// a1^+ a2 -> |1><2| on the one-excitation subspace
Su2Generators su2_generators() {
  Su2Generators g;
  g.L0 = 0.5 * Mat2c::Identity();
  g.L1 << 0.0, 0.5, 0.5, 0.0;
  g.L2 << 0.0, -0.5 * kI, 0.5 * kI, 0.0;
  g.L3 << 0.5, 0.0, 0.0, -0.5;
  return g;
}

Mat2c rotation(double phi, const Mat2c& L2) {
  const Mat2c generator = -kI * phi * L2;
  return generator.exp();
}

double max_abs(const Mat2c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

double Su2Residuals::max() const {
  return std::max({l1_rotation, l3_rotation, l0_invariance, l2_invariance});
}

Su2Residuals su2_identity_check(double phi) {
  const Su2Generators g = su2_generators();
  const Mat2c U = rotation(phi, g.L2);
  const Mat2c Ud = U.adjoint();
  const double c = std::cos(phi);
  const double s = std::sin(phi);

  Su2Residuals r;
  r.l1_rotation = max_abs(U * g.L1 * Ud - (g.L1 * c - g.L3 * s));
  r.l3_rotation = max_abs(U * g.L3 * Ud - (g.L1 * s + g.L3 * c));
  r.l0_invariance = max_abs(U * g.L0 * Ud - g.L0);
  r.l2_invariance = max_abs(U * g.L2 * Ud - g.L2);
  return r;
}

DiagonalizationCheck diagonalization_check(double omega1p, double omega2p, double J12) {
  const Su2Generators g = su2_generators();
  const double gap = omega1p - omega2p;

  DiagonalizationCheck d;
  d.phi0 = mixing_angle(gap, J12);
  const Mat2c H = (omega1p + omega2p) * g.L0 + gap * g.L3 + 2.0 * J12 * g.L1;
  const Mat2c U = rotation(d.phi0, g.L2);
  const Mat2c rotated = U * H * U.adjoint();

  d.off_diagonal = std::max(std::abs(rotated(0, 1)), std::abs(rotated(1, 0)));
  d.diagonal << rotated(0, 0).real(), rotated(1, 1).real();
  d.expected = exciton_frequencies(omega1p, omega2p, J12);

  // with w'_1 < w'_2 the principal branch puts the lower eigenvalue first
  Eigen::Vector2d want(d.expected.plus, d.expected.minus);
  if (gap < 0.0) std::swap(want(0), want(1));
  const double scale = std::max(std::fabs(d.expected.plus), std::fabs(d.expected.minus));
  d.max_relative_error = (d.diagonal - want).cwiseAbs().maxCoeff() / (scale > 0.0 ? scale : 1.0);
  return d;
}

}  // namespace dimer
