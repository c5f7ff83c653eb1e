#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dimer/errors.hpp"
#include "dimer/numerics.hpp"

using namespace dimer;
using namespace dimer::numerics;

TEST_CASE("linspace and geomspace") {
  const auto a = linspace(0.2, 5.0, 200);
  REQUIRE(a.size() == 200);
  CHECK(a.front() == 0.2);
  CHECK(a.back() == 5.0);
  CHECK(a[1] - a[0] == doctest::Approx(4.8 / 199));

  const auto g = geomspace(1e-6, 50.0, 2000);
  REQUIRE(g.size() == 2000);
  CHECK(g.front() == doctest::Approx(1e-6));
  CHECK(g.back() == 50.0);
  CHECK(g[2] / g[1] == doctest::Approx(g[1] / g[0]).epsilon(1e-12));

  CHECK_THROWS_AS(linspace(0, 1, 1), DomainError);
  CHECK_THROWS_AS(geomspace(0, 1, 10), DomainError);
  CHECK_THROWS_AS(geomspace(2, 1, 10), DomainError);
}

TEST_CASE("golden-section search") {
  const Minimum m = golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3) + 2.0; }, 0.0, 5.0, 1e-9);
  CHECK(m.x == doctest::Approx(1.3).epsilon(1e-8));
  CHECK(m.value == doctest::Approx(2.0));

  // asymmetric, non-polynomial: x + 1/x has its minimum at 1
  const Minimum r = golden_section_minimize([](double x) { return x + 1.0 / x; }, 0.1, 30.0, 1e-10);
  CHECK(r.x == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 1.0, 1.0, 1e-6), DomainError);
  CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("bisection") {
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(bisect_root([](double x) { return std::cos(x); }, 3.0, 1.0, 1e-13) == doctest::Approx(M_PI / 2).epsilon(1e-12));
  CHECK(bisect_root([](double x) { return x; }, 0.0, 1.0, 1e-12) == doctest::Approx(0.0));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), DomainError);
}

TEST_CASE("bracketed roots") {
  const auto f = [](double x) { return (x - 0.5) * (x - 1.5) * (x - 2.0); };
  const auto roots = bracketed_roots(f, linspace(0.1, 3.05, 60), 1e-12);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(roots[1] == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(roots[2] == doctest::Approx(2.0).epsilon(1e-10));

  // roots exactly on grid points are reported once
  const auto on_grid = bracketed_roots([](double x) { return x - 1.0; }, linspace(0.0, 2.0, 5), 1e-12);
  REQUIRE(on_grid.size() == 1);
  CHECK(on_grid[0] == 1.0);

  CHECK(bracketed_roots([](double x) { return x * x + 1.0; }, linspace(-2, 2, 50), 1e-12).empty());
}
