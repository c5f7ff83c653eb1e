#include "dimer/numerics.hpp"

#include <cmath>
#include <utility>

#include "dimer/errors.hpp"

namespace dimer::numerics {

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("linspace: need at least two points");
  std::vector<double> v(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * i;
  v.back() = hi;
  return v;
}

std::vector<double> geomspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("geomspace: need 0 < lo < hi");
  std::vector<double> v = linspace(std::log(lo), std::log(hi), n);
  for (double& x : v) x = std::exp(x);
  v.front() = lo;
  v.back() = hi;
  return v;
}

Minimum golden_section_minimize(const ScalarFunction& f, double lo, double hi, double tol) {
  if (!(hi > lo)) throw DomainError("golden_section_minimize: empty interval");
  if (!(tol > 0.0)) throw DomainError("golden_section_minimize: tolerance must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

double bisect_root(const ScalarFunction& f, double lo, double hi, double tol) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw DomainError("bisect_root: endpoints do not bracket a root");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> bracketed_roots(const ScalarFunction& f, const std::vector<double>& grid, double tol) {
  std::vector<double> roots;
  if (grid.empty()) return roots;
  double prev_x = grid.front();
  double prev_f = f(prev_x);
  if (prev_f == 0.0) roots.push_back(prev_x);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x = grid[i];
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (prev_f != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
      roots.push_back(bisect_root(f, prev_x, x, tol));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

}  // namespace dimer::numerics
