#include "dimer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimer/decay.hpp"
#include "dimer/errors.hpp"
#include "dimer/numerics.hpp"

namespace dimer {

namespace {

DimerParams at_theta(DimerParams p, double theta) {
  p.theta = fold_theta(theta);
  return p;
}

double inverse_alpha_at(DimerParams p, double eta_abs) {
  p.eta_abs = eta_abs;
  return 1.0 / attenuation_factor(p);
}

}  // namespace

SweepResult sweep_inverse_alpha(const DimerParams& tmpl, double theta, std::span<const double> eta_grid) {
  if (eta_grid.empty()) throw DomainError("sweep_inverse_alpha: empty |eta| grid");
  for (std::size_t i = 0; i < eta_grid.size(); ++i) {
    if (!(eta_grid[i] > 0.0)) throw DomainError("sweep_inverse_alpha: grid values must be positive");
    if (i > 0 && !(eta_grid[i] > eta_grid[i - 1]))
      throw DomainError("sweep_inverse_alpha: grid must be strictly increasing");
  }

  const DimerParams p = at_theta(tmpl, theta);
  SweepResult r;
  r.theta = p.theta;
  for (double eta : eta_grid) {
    DimerParams q = p;
    q.eta_abs = eta;
    const double alpha = attenuation_factor(q);
    if (alpha > 0.0) r.points.push_back({eta, 1.0 / alpha});
  }
  if (r.points.empty()) throw DomainError("sweep_inverse_alpha: alpha vanishes on the whole grid");
  r.minimum = *std::min_element(r.points.begin(), r.points.end(),
                                [](const SweepPoint& a, const SweepPoint& b) { return a.inverse_alpha < b.inverse_alpha; });
  return r;
}

AlphaMinimum find_alpha_minimum(const DimerParams& p, double theta, const MinimizeOptions& opts) {
  if (p.J12 == 0.0) throw DomainError("find_alpha_minimum: J12 must be non-zero");
  const DimerParams q = at_theta(p, theta);
  const auto f = [&](double eta) { return inverse_alpha_at(q, eta); };

  const std::vector<double> grid = numerics::geomspace(opts.eta_lo, opts.eta_hi, opts.scan_points);
  std::size_t best = 0;
  double best_value = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0 || best + 1 == grid.size()) {
    std::ostringstream msg;
    msg << "find_alpha_minimum: no interior minimum of 1/alpha for |eta| in [" << opts.eta_lo << ", "
        << opts.eta_hi << "]";
    throw NoSolutionError(msg.str());
  }

  const numerics::Minimum m = numerics::golden_section_minimize(f, grid[best - 1], grid[best + 1], opts.tol);
  return {m.x, m.value};
}

EtaEstimate estimate_eta(const DimerParams& p, double theta, double target_ratio, const RootOptions& opts) {
  if (!(target_ratio > 0.0)) throw DomainError("estimate_eta: target ratio must be positive");
  const DimerParams q = at_theta(p, theta);
  const double gap = q.bare_gap();
  const double c = std::cos(q.theta);
  const double J2 = q.J12 * q.J12;

  const auto residual = [&](double x) {
    const double shifted = gap + 2.0 * q.lambda1 * x * (2.0 * c + x);
    return shifted * shifted + 4.0 * J2 - target_ratio * x * x * J2;
  };

  EtaEstimate est;
  est.target_ratio = target_ratio;
  est.theta = q.theta;
  for (double x : numerics::bracketed_roots(residual, numerics::linspace(0.0, opts.eta_hi, opts.scan_cells + 1), opts.tol))
    if (x > 0.0) est.all_roots.push_back(x);

  if (est.all_roots.empty()) {
    std::ostringstream msg;
    msg << "estimate_eta: no |eta| in (0, " << opts.eta_hi << "] reaches 1/alpha = " << target_ratio;
    try {
      const AlphaMinimum m = find_alpha_minimum(q, q.theta);
      msg << "; the minimum of 1/alpha is " << m.inv_alpha_min << " at |eta| = " << m.eta_min;
    } catch (const std::exception&) {
      // the message is still useful without the minimum
    }
    throw NoSolutionError(msg.str());
  }

  est.eta_abs = est.all_roots.front();
  const Reorganization r = lambda2_from_eta(q.lambda1, est.eta_abs, q.theta);
  est.lambda2 = r.lambda2;
  est.lambda2_unphysical = r.unphysical;
  return est;
}

double estimate_eta_limit(double gap0, double J12, double target_ratio) {
  if (!(target_ratio > 0.0)) throw DomainError("estimate_eta_limit: target ratio must be positive");
  if (J12 == 0.0) throw DomainError("estimate_eta_limit: J12 must be non-zero");
  return (gap0 / std::fabs(J12)) / std::sqrt(target_ratio);
}

}  // namespace dimer
