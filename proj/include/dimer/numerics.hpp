#pragma once

#include <functional>
#include <vector>

namespace dimer::numerics {

using ScalarFunction = std::function<double(double)>;

/// n points from lo to hi inclusive, evenly spaced. Requires n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

/// n points from lo to hi inclusive, evenly spaced in log. Requires 0 < lo < hi, n >= 2.
std::vector<double> geomspace(double lo, double hi, int n);

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi] for a unimodal f. Stops once the
/// bracketing interval is shorter than `tol`.
Minimum golden_section_minimize(const ScalarFunction& f, double lo, double hi, double tol);

/// Bisection on a sign change f(lo) * f(hi) <= 0 until the interval is shorter
/// than `tol`. Throws DomainError when the endpoints do not bracket a root.
double bisect_root(const ScalarFunction& f, double lo, double hi, double tol);

/// All sign changes of f on consecutive points of `grid`, each refined by
/// bisect_root. Exact zeros on grid points are reported once.
std::vector<double> bracketed_roots(const ScalarFunction& f, const std::vector<double>& grid, double tol);

}  // namespace dimer::numerics
