#pragma once

#include <span>
#include <vector>

#include "dimer/exciton.hpp"

namespace dimer {

struct SweepPoint {
  double eta_abs = 0.0;
  double inverse_alpha = 0.0;
};

/// 1/alpha along an |eta| grid at fixed theta.
struct SweepResult {
  double theta = 0.0;
  std::vector<SweepPoint> points;  // strictly increasing in eta_abs
  SweepPoint minimum;              // smallest sampled 1/alpha
};

/// Evaluates 1/alpha on `eta_grid` (positive, strictly increasing) with the
/// remaining fields taken from `tmpl`. Grid points with alpha == 0 are skipped.
SweepResult sweep_inverse_alpha(const DimerParams& tmpl, double theta, std::span<const double> eta_grid);

struct MinimizeOptions {
  double eta_lo = 1e-6;
  double eta_hi = 50.0;
  int scan_points = 2000;  // log-spaced coarse scan used to bracket the minimum
  double tol = 1e-6;       // final bracket width in |eta|
};

struct AlphaMinimum {
  double eta_min = 0.0;
  double inv_alpha_min = 0.0;
};

/// Minimum of 1/alpha over |eta| at fixed theta: coarse scan to bracket, then
/// golden-section refinement. Throws NoSolutionError if the scan minimum sits
/// on the range boundary and DomainError if J12 == 0.
AlphaMinimum find_alpha_minimum(const DimerParams& p, double theta, const MinimizeOptions& opts = {});

struct RootOptions {
  double eta_hi = 100.0;  // scan range is (0, eta_hi]
  int scan_cells = 100000;
  double tol = 1e-10;
};

struct EtaEstimate {
  double target_ratio = 0.0;
  double theta = 0.0;
  double eta_abs = 0.0;  // smallest positive root
  double lambda2 = 0.0;
  bool lambda2_unphysical = false;
  std::vector<double> all_roots;
};

/// Solves 1/alpha(|eta|) = target_ratio, i.e. the quartic
///   [gap + 2 lambda1 x (2 cos(theta) + x)]^2 + 4 J12^2 = target_ratio x^2 J12^2,
/// by a sign-change scan and bisection. Throws NoSolutionError (naming the
/// attainable minimum of 1/alpha) when no positive root exists.
EtaEstimate estimate_eta(const DimerParams& p, double theta, double target_ratio, const RootOptions& opts = {});

/// |eta| from the weak-coupling limit of 1/alpha: (gap0/|J12|)/sqrt(target_ratio).
double estimate_eta_limit(double gap0, double J12, double target_ratio);

}  // namespace dimer
