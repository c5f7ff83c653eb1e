#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dimer/errors.hpp"
#include "dimer/exciton.hpp"
#include "dimer/units.hpp"
#include "test_support.hpp"

using namespace dimer;
using dimer::units::kPi;

TEST_CASE("renormalized gap") {
  DimerParams p = testing::fmo_dimer(0.0);
  CHECK(renormalized_gap(p) == 120.0);

  p.eta_abs = 0.71;
  CHECK(renormalized_gap(p) == doctest::Approx(120.0 + 70.0 * 0.71 * 2.71).epsilon(1e-14));
  CHECK(renormalized_gap(p) == doctest::Approx(254.687).epsilon(1e-12));

  // 2 cos(pi) + 2 = 0 cancels the reorganization shift
  p.eta_abs = 2.0;
  p.theta = kPi;
  CHECK(renormalized_gap(p) == doctest::Approx(120.0).epsilon(1e-14));
}

TEST_CASE("mixing angle") {
  CHECK(mixing_angle(120.0, 0.0) == 0.0);
  CHECK(mixing_angle(120.0, -96.0) == doctest::Approx(1.0121970114513341).epsilon(1e-14));
  CHECK(mixing_angle(0.0, 96.0) == doctest::Approx(-kPi / 2));
  CHECK(mixing_angle(0.0, -96.0) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(mixing_angle(0.0, 0.0), DegenerateDimerError);

  for (int i = 0; i < 100; ++i) {
    const double gap = testing::uniform(-500.0, 500.0);
    const double J = testing::uniform(-200.0, 200.0);
    const double phi = mixing_angle(gap, J);
    CHECK(phi >= -kPi / 2);
    CHECK(phi <= kPi / 2);
  }
}

TEST_CASE("exciton frequencies") {
  ExcitonPair e = exciton_frequencies(100.0, 50.0, 0.0);
  CHECK(e.plus == 100.0);
  CHECK(e.minus == 50.0);

  e = exciton_frequencies(100.0, 100.0, 96.0);
  CHECK(e.plus == doctest::Approx(196.0));
  CHECK(e.minus == doctest::Approx(4.0));

  e = exciton_frequencies(60.0, -60.0, 96.0);
  CHECK(e.plus - e.minus == doctest::Approx(226.4155471693585).epsilon(1e-13));
}

TEST_CASE("exciton frame invariants over random dimers") {
  for (int i = 0; i < 200; ++i) {
    DimerParams p;
    p.omega2 = testing::uniform(-500.0, 12000.0);
    p.omega1 = p.omega2 + testing::uniform(1.0, 400.0);
    p.J12 = testing::uniform(-150.0, 150.0);
    p.lambda1 = testing::uniform(0.0, 80.0);
    p.eta_abs = testing::uniform(0.0, 5.0);
    p.theta = testing::uniform(0.0, kPi);
    const ExcitonFrame f = exciton_frame(p);

    const double scale = std::fabs(f.omega1p) + std::fabs(f.omega2p);
    CHECK(std::fabs(f.omega_plus + f.omega_minus - (f.omega1p + f.omega2p)) <= 1e-12 * scale);
    CHECK(f.omega0 == doctest::Approx(std::hypot(f.omega1p - f.omega2p, 2.0 * p.J12)).epsilon(1e-12));
    CHECK(f.omega0 >= 2.0 * std::fabs(p.J12));
    CHECK(f.omega_plus >= f.omega_minus);
    CHECK(f.omega1p - f.omega2p == doctest::Approx(renormalized_gap(p)).epsilon(1e-10));

    // omega0 depends on cos(theta) only
    DimerParams q = p;
    q.theta = -p.theta;
    CHECK(exciton_frame(q).omega0 == doctest::Approx(f.omega0).epsilon(1e-14));
  }
}

TEST_CASE("omega0 reaches 2|J12| only when the renormalized gap vanishes") {
  // 60 + 70 x (x - 2) = 0 at x = 1 - sqrt(1/7)
  DimerParams p = testing::fmo_dimer(1.0 - std::sqrt(1.0 / 7.0), kPi);
  p.omega1 = 60.0;
  const ExcitonFrame f = exciton_frame(p);
  CHECK(std::abs(renormalized_gap(p)) <= 1e-12);
  CHECK(f.omega0 == doctest::Approx(2.0 * 96.0));
  p.eta_abs = 1.9;
  CHECK(exciton_frame(p).omega0 > 2.0 * 96.0);
}

TEST_CASE("inverted dimer is flagged") {
  // lambda2 large enough to push w'_2 above w'_1
  DimerParams p = testing::fmo_dimer(0.5, kPi);
  p.omega1 = 10.0;
  p.lambda1 = 100.0;
  const ExcitonFrame f = exciton_frame(p);
  CHECK(f.inverted);
  CHECK(f.omega_plus > f.omega_minus);
  CHECK(!exciton_frame(testing::fmo_dimer()).inverted);
}

TEST_CASE("basis map") {
  const BasisMap id = basis_map(0.0);
  CHECK(id.exciton_to_site.isApprox(Eigen::Matrix2d::Identity()));

  // equal weights of both sites
  const BasisMap half = basis_map(kPi / 2);
  CHECK(half.exciton_to_site.cwiseAbs().isApprox(Eigen::Matrix2d::Constant(1.0 / std::sqrt(2.0)), 1e-15));

  for (int i = 0; i < 100; ++i) {
    const double phi0 = testing::uniform(-kPi / 2, kPi / 2);
    const BasisMap m = basis_map(phi0);
    CHECK((m.exciton_to_site * m.exciton_to_site.transpose() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    const Eigen::Vector2d v(testing::uniform(-1, 1), testing::uniform(-1, 1));
    CHECK((m.site_to_exciton * (m.exciton_to_site * v) - v).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("basis map matches the exciton operator definitions") {
  // A1 = a1 cos - a2 sin and A2 = a1 sin + a2 cos give |e1> = cos|1> - sin|2>
  // and |e2> = sin|1> + cos|2>; <i|e_j> must equal the amplitude of |e_j> in |i>.
  const double phi0 = 0.7;
  const double c = std::cos(phi0 / 2), s = std::sin(phi0 / 2);
  Eigen::Matrix2d site_of_exciton;  // column j: |e_j> in site coordinates
  site_of_exciton.col(0) << c, -s;
  site_of_exciton.col(1) << s, c;
  CHECK(basis_map(phi0).exciton_to_site.isApprox(site_of_exciton, 1e-15));
}

TEST_CASE("SU(2) identities") {
  CHECK(su2_identity_check(0.0).max() == 0.0);
  CHECK(su2_identity_check(kPi / 2).max() <= 1e-14);
  for (int i = 0; i < 100; ++i) CHECK(su2_identity_check(testing::uniform(-kPi / 2, kPi / 2)).max() <= 1e-12);
}

TEST_CASE("rotation by phi0 diagonalizes the dimer Hamiltonian") {
  const DiagonalizationCheck d = diagonalization_check(60.0, -60.0, -96.0);
  CHECK(d.phi0 == doctest::Approx(mixing_angle(120.0, -96.0)));
  CHECK(d.off_diagonal <= 1e-12);
  CHECK(d.diagonal(0) == doctest::Approx(d.expected.plus).epsilon(1e-12));
  CHECK(d.diagonal(1) == doctest::Approx(d.expected.minus).epsilon(1e-12));

  for (int i = 0; i < 100; ++i) {
    const double w2 = testing::uniform(-300.0, 300.0);
    const double w1 = w2 + testing::uniform(0.1, 400.0);
    const DiagonalizationCheck r = diagonalization_check(w1, w2, testing::uniform(-200.0, 200.0));
    CHECK(r.off_diagonal <= 1e-12 * std::max(std::fabs(w1), std::fabs(w2)));
    CHECK(r.max_relative_error <= 1e-12);
  }
}

TEST_CASE("DimerParams validation and Cartesian eta") {
  CHECK_NOTHROW(testing::fmo_dimer().validate());
  DimerParams p = testing::fmo_dimer();
  p.omega2 = 200.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = testing::fmo_dimer();
  p.lambda1 = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = testing::fmo_dimer();
  p.theta = 4.0;
  CHECK_THROWS_AS(p.validate(), DomainError);

  const DimerParams c = DimerParams::from_complex_eta(120.0, 0.0, 96.0, 35.0, {0.0, -1.5});
  CHECK(c.eta_abs == doctest::Approx(1.5));
  CHECK(c.theta == doctest::Approx(kPi / 2));

  CHECK(fold_theta(-0.0) == 0.0);
  CHECK(!std::signbit(fold_theta(-0.0)));
  CHECK(fold_theta(-kPi / 4) == doctest::Approx(kPi / 4));
  CHECK(fold_theta(2 * kPi + 0.3) == doctest::Approx(0.3));
}
