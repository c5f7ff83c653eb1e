#include "dimer/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "dimer/errors.hpp"
#include "dimer/exciton.hpp"
#include "dimer/units.hpp"

namespace dimer {

namespace {

using Mat3c = Eigen::Matrix3cd;
using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

Eigen::Matrix3d embed_rotation(double phi0) {
  Eigen::Matrix3d w = Eigen::Matrix3d::Identity();
  w.bottomRightCorner<2, 2>() = basis_map(phi0).exciton_to_site;
  return w;
}

void require_physical(const OneExcitationState& s, const char* where) {
  const StateDiagnostics d = diagnose(s);
  if (!d.physical(1e-10, 1e-10, 1e-10))
    throw DomainError(std::string(where) + ": initial state is not a unit-trace positive Hermitian matrix");
}

Mat3c hermitize(const Mat3c& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

std::string_view to_string(Basis b) { return b == Basis::exciton ? "exciton" : "site"; }

StateDiagnostics diagnose(const OneExcitationState& s) {
  StateDiagnostics d;
  d.hermiticity_error = (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(s.rho.trace() - 1.0);
  const Eigen::SelfAdjointEigenSolver<Mat3c> eig(hermitize(s.rho), Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();
  return d;
}

OneExcitationState pure_state(Basis basis, const Eigen::Vector3cd& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw DomainError("pure_state: zero amplitude vector");
  const Eigen::Vector3cd psi = amplitudes / norm;
  return {basis, psi * psi.adjoint()};
}

double sup_norm_distance(const OneExcitationState& a, const OneExcitationState& b) {
  if (a.basis != b.basis) throw DomainError("sup_norm_distance: states are in different bases");
  return (a.rho - b.rho).cwiseAbs().maxCoeff();
}

void EvolutionParams::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("EvolutionParams: gamma must be non-negative");
  if (!(nbar0 >= 0.0) || !std::isfinite(nbar0)) throw DomainError("EvolutionParams: nbar0 must be non-negative");
  if (!std::isfinite(omega_plus) || !std::isfinite(omega_minus) || !std::isfinite(phi0))
    throw DomainError("EvolutionParams: non-finite frequency or angle");
}

OneExcitationState to_site_basis(const OneExcitationState& s, double phi0) {
  if (s.basis == Basis::site) return s;
  const Eigen::Matrix3d w = embed_rotation(phi0);
  return {Basis::site, w * s.rho * w.transpose()};
}

OneExcitationState from_site_basis(const OneExcitationState& s, double phi0) {
  if (s.basis == Basis::exciton) return s;
  const Eigen::Matrix3d w = embed_rotation(phi0);
  return {Basis::exciton, w.transpose() * s.rho * w};
}

OneExcitationState in_basis(const OneExcitationState& s, Basis target, double phi0) {
  return target == Basis::site ? to_site_basis(s, phi0) : from_site_basis(s, phi0);
}

OneExcitationState analytic_evolve(const OneExcitationState& rho0, double t, const EvolutionParams& p) {
  if (!(t >= 0.0)) throw DomainError("analytic_evolve: time must be non-negative");
  p.validate();
  require_physical(rho0, "analytic_evolve");

  const Mat3c r = from_site_basis(rho0, p.phi0).rho;
  const double g = p.gamma;
  const double n = p.nbar0;
  const double wp = units::wavenumber_to_angular(p.omega_plus);
  const double wm = units::wavenumber_to_angular(p.omega_minus);
  const double relax = g * (1.0 + 2.0 * n);

  const double excited = (r(1, 1) + r(2, 2)).real();
  const double filled = -std::expm1(-relax * t);  // 1 - exp(-relax t)
  const double p11 = r(1, 1).real() * std::exp(-relax * t) + n * excited / (1.0 + 2.0 * n) * filled;

  Mat3c out;
  out(0, 0) = r(0, 0).real();
  out(0, 1) = r(0, 1) * std::exp(-0.5 * g * (1.0 + n) * t) * std::exp(kI * (wp * t));
  out(0, 2) = r(0, 2) * std::exp(-0.5 * g * n * t) * std::exp(kI * (wm * t));
  out(1, 1) = p11;
  out(2, 2) = excited - p11;
  out(1, 2) = r(1, 2) * std::exp(-0.5 * relax * t) * std::exp(-kI * ((wp - wm) * t));
  out(1, 0) = std::conj(out(0, 1));
  out(2, 0) = std::conj(out(0, 2));
  out(2, 1) = std::conj(out(1, 2));

  const OneExcitationState evolved{Basis::exciton, out};
  return rho0.basis == Basis::site ? to_site_basis(evolved, p.phi0) : evolved;
}

LindbladGenerator::LindbladGenerator(const EvolutionParams& p)
    : energies_(0.0, units::wavenumber_to_angular(p.omega_plus), units::wavenumber_to_angular(p.omega_minus)),
      up_rate_(p.gamma * p.nbar0),
      down_rate_(p.gamma * (p.nbar0 + 1.0)) {
  p.validate();
}

Eigen::Matrix3cd LindbladGenerator::operator()(const Eigen::Matrix3cd& rho) const {
  // L+ = |e1><e2|, L- = |e2><e1|
  Mat3c raise = Mat3c::Zero();
  raise(1, 2) = 1.0;
  const Mat3c lower = raise.adjoint();
  const Mat3c n_lower = lower * raise;  // L- L+ = |e2><e2|
  const Mat3c n_upper = raise * lower;  // L+ L- = |e1><e1|

  const Mat3c H = energies_.cast<cplx>().asDiagonal();
  Mat3c d = -kI * (H * rho - rho * H);
  d += up_rate_ * (raise * rho * lower - 0.5 * (n_lower * rho + rho * n_lower));
  d += down_rate_ * (lower * rho * raise - 0.5 * (n_upper * rho + rho * n_upper));
  return d;
}

double LindbladGenerator::max_step() const {
  const double relax = up_rate_ + down_rate_;  // gamma (1 + 2n)
  const double fastest = energies_.cwiseAbs().maxCoeff();
  const double inf = std::numeric_limits<double>::infinity();
  return 0.1 * std::min(relax > 0.0 ? 1.0 / relax : inf, fastest > 0.0 ? 1.0 / fastest : inf);
}

namespace {

Mat3c integrate(Mat3c rho, double t, double dt, const LindbladGenerator& K) {
  if (t <= 0.0) return rho;
  const auto steps = static_cast<long>(std::ceil(t / dt - 1e-9));
  const double h = t / static_cast<double>(std::max(steps, 1L));
  for (long i = 0; i < std::max(steps, 1L); ++i) {
    const Mat3c k1 = K(rho);
    const Mat3c k2 = K(rho + 0.5 * h * k1);
    const Mat3c k3 = K(rho + 0.5 * h * k2);
    const Mat3c k4 = K(rho + h * k3);
    rho = hermitize(rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  return rho;
}

void check_step(double dt, const LindbladGenerator& K) {
  if (!(dt > 0.0)) throw StepSizeError("numeric_evolve: step must be positive");
  const double bound = K.max_step();
  if (dt > bound * (1.0 + 1e-12))
    throw StepSizeError("numeric_evolve: step " + std::to_string(dt) + " fs exceeds the bound " +
                        std::to_string(bound) + " fs");
}

}  // namespace

OneExcitationState numeric_evolve(const OneExcitationState& rho0, double t, double dt,
                                  const EvolutionParams& p) {
  if (!(t >= 0.0)) throw DomainError("numeric_evolve: time must be non-negative");
  const LindbladGenerator K(p);
  check_step(dt, K);
  const OneExcitationState start = from_site_basis(rho0, p.phi0);
  const OneExcitationState out{Basis::exciton, integrate(start.rho, t, dt, K)};
  return rho0.basis == Basis::site ? to_site_basis(out, p.phi0) : out;
}

std::vector<OneExcitationState> analytic_trajectory(const OneExcitationState& rho0,
                                                    std::span<const double> times,
                                                    const EvolutionParams& p) {
  std::vector<OneExcitationState> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(analytic_evolve(rho0, t, p));
  return out;
}

std::vector<OneExcitationState> numeric_trajectory(const OneExcitationState& rho0,
                                                   std::span<const double> times, double dt,
                                                   const EvolutionParams& p) {
  const LindbladGenerator K(p);
  check_step(dt, K);
  std::vector<OneExcitationState> out;
  out.reserve(times.size());
  Mat3c rho = from_site_basis(rho0, p.phi0).rho;
  double now = 0.0;
  for (double t : times) {
    if (!(t >= now)) throw DomainError("numeric_trajectory: times must be non-negative and non-decreasing");
    rho = integrate(rho, t - now, dt, K);
    now = t;
    out.push_back(in_basis({Basis::exciton, rho}, rho0.basis, p.phi0));
  }
  return out;
}

}  // namespace dimer
