#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dimer/decay.hpp"
#include "dimer/errors.hpp"
#include "dimer/units.hpp"
#include "test_support.hpp"

using namespace dimer;
using dimer::units::kPi;

TEST_CASE("Bose occupation") {
  CHECK(bose_occupation(123.0, 0.0) == 0.0);
  CHECK(bose_occupation(units::thermal_energy(300.0), 300.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
  CHECK(bose_occupation(208.51044, 300.0) == doctest::Approx(0.58198).epsilon(1e-5));
  // independent evaluation: kT = 208.51044 cm^-1, 1/(exp(226.41/kT) - 1)
  CHECK(bose_occupation(226.41, 300.0) == doctest::Approx(0.5096992359).epsilon(1e-9));
  CHECK_THROWS_AS(bose_occupation(0.0, 300.0), DomainError);
  CHECK_THROWS_AS(bose_occupation(-5.0, 300.0), DomainError);
  CHECK_THROWS_AS(bose_occupation(5.0, -1.0), DomainError);
}

TEST_CASE("Bose occupation satisfies detailed balance") {
  for (int i = 0; i < 200; ++i) {
    const double w = testing::uniform(1.0, 2000.0);
    const double T = testing::uniform(5.0, 600.0);
    const double n = bose_occupation(w, T);
    CHECK(n >= 0.0);
    CHECK(n / (n + 1.0) == doctest::Approx(std::exp(-w / units::thermal_energy(T))).epsilon(1e-12));
  }
}

TEST_CASE("attenuation factor") {
  CHECK(attenuation_factor(testing::fmo_dimer(0.0)) == 0.0);
  DimerParams uncoupled = testing::fmo_dimer();
  uncoupled.J12 = 0.0;
  CHECK(attenuation_factor(uncoupled) == 0.0);

  for (double J : {96.0, -96.0}) {
    CHECK(1.0 / attenuation_factor(testing::fmo_dimer(1.64, 0.0, J)) == doctest::Approx(13.2).epsilon(0.05 / 13.2));
    CHECK(1.0 / attenuation_factor(testing::fmo_dimer(2.24, kPi, J)) == doctest::Approx(1.33).epsilon(0.01 / 1.33));
  }

  // closed form evaluated independently
  const double w0 = std::sqrt(std::pow(120.0 + 70.0 * 0.71 * 2.71, 2) + 4.0 * 96.0 * 96.0);
  CHECK(attenuation_factor(testing::fmo_dimer()) == doctest::Approx(std::pow(0.71 * 96.0 / w0, 2)).epsilon(1e-14));
}

TEST_CASE("attenuation factor is reflection symmetric in theta") {
  for (int i = 0; i < 100; ++i) {
    const double eta = testing::uniform(0.01, 6.0);
    const double th = testing::uniform(0.0, kPi);
    DimerParams p = testing::fmo_dimer(eta, th);
    const double a = attenuation_factor(p);
    p.theta = -th;
    CHECK(attenuation_factor(p) == doctest::Approx(a).epsilon(1e-14));
  }
}

TEST_CASE("attenuation factor vanishes at both ends of |eta|") {
  for (double th : {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}) {
    double prev = attenuation_factor(testing::fmo_dimer(1e-4, th));
    CHECK(prev < 1e-8);
    // increasing towards the maximum from small |eta|
    for (double eta = 2e-4; eta < 0.3; eta *= 1.5) {
      const double a = attenuation_factor(testing::fmo_dimer(eta, th));
      CHECK(a > prev);
      prev = a;
    }
    CHECK(attenuation_factor(testing::fmo_dimer(1e3, th)) < 1e-3);
    CHECK(attenuation_factor(testing::fmo_dimer(1e5, th)) < 1e-7);
  }
}

TEST_CASE("decay constant") {
  CHECK(decay_constant(1.0 / 22.0, 1.0 / 50.0) == doctest::Approx(1.0 / 1100.0).epsilon(1e-14));
  CHECK(decay_constant(0.0, 0.3) == 0.0);
  CHECK(1.0 / decay_constant(1.0 / 36.6, 1.0 / 50.0) == doctest::Approx(1830.0).epsilon(1e-12));
  CHECK_THROWS_AS(decay_constant(-1.0, 0.1), DomainError);

  for (int i = 0; i < 50; ++i) {
    const double a = testing::uniform(0, 1), b = testing::uniform(0, 1), g = testing::uniform(0, 1), s = testing::uniform(0, 5);
    CHECK(decay_constant(a + b, g) == doctest::Approx(decay_constant(a, g) + decay_constant(b, g)).epsilon(1e-14));
    CHECK(decay_constant(a, s * g) == doctest::Approx(s * decay_constant(a, g)).epsilon(1e-14));
  }
}

TEST_CASE("rate set") {
  BathSpec bath;
  bath.temperature = 300.0;
  bath.gamma_d = 1.0 / 50.0;
  const RateSet r = rate_set(testing::fmo_dimer(), bath);
  CHECK(r.gamma == doctest::Approx(r.alpha * bath.gamma_d).epsilon(1e-12));
  CHECK(r.inverse_alpha == doctest::Approx(1.0 / r.alpha));
  REQUIRE(r.lifetime.has_value());
  CHECK(*r.lifetime == doctest::Approx(1.0 / r.gamma));
  CHECK(r.nbar0 == doctest::Approx(bose_occupation(exciton_frame(testing::fmo_dimer()).omega0, 300.0)));

  const RateSet zero = rate_set(testing::fmo_dimer(0.0), bath);
  CHECK(zero.alpha == 0.0);
  CHECK(zero.gamma == 0.0);
  CHECK(!zero.lifetime.has_value());
  CHECK(std::isinf(zero.inverse_alpha));
}

TEST_CASE("weak-coupling limit of 1/alpha") {
  CHECK(limit_inverse_alpha(1.0, 200.0, 5.0) == doctest::Approx(1600.0));
  CHECK(limit_inverse_alpha(10.7, 200.0, 5.0) == doctest::Approx(13.97).epsilon(0.005));
  CHECK(limit_inverse_alpha(2.0, 200.0, 5.0) == doctest::Approx(400.0));
  CHECK_THROWS_AS(limit_inverse_alpha(0.0, 200.0, 5.0), DomainError);
  CHECK_THROWS_AS(limit_inverse_alpha(1.0, 200.0, 0.0), DomainError);
}

TEST_CASE("helix attenuation") {
  CHECK(1.0 / helix_attenuation(4.5, 4000.0, 7.8) == doctest::Approx(36.6).epsilon(0.2 / 36.6));
  CHECK(helix_attenuation(4.5, 4000.0, 0.0) == 0.0);
  CHECK(helix_attenuation(9.0, 4000.0, 7.8) == doctest::Approx(4.0 * helix_attenuation(4.5, 4000.0, 7.8)).epsilon(1e-14));
  // (a/v) J with J = 2 pi c 7.8 cm^-1 = 1.4692482e12 rad/s and a/v = 1.125e-13 s
  CHECK(helix_attenuation(4.5, 4000.0, 7.8) == doctest::Approx(std::pow(1.125e-13 * 1.4692482225e12, 2)).epsilon(1e-9));
}

TEST_CASE("lambda2 from eta") {
  CHECK(lambda2_from_eta(35.0, 0.0, 1.0).lambda2 == 35.0);
  CHECK(lambda2_from_eta(35.0, 0.71, 0.0).lambda2 == doctest::Approx(102.3).epsilon(0.001));
  CHECK(std::round(lambda2_from_eta(35.0, 0.71, 0.0).lambda2) == 102.0);
  CHECK(lambda2_from_eta(35.0, 0.45, kPi).lambda2 == doctest::Approx(10.6).epsilon(0.01));
  CHECK(std::round(lambda2_from_eta(35.0, 0.45, kPi).lambda2) == 11.0);
  CHECK_THROWS_AS(lambda2_from_eta(-1.0, 0.5, 0.0), DomainError);

  // 1 + x(2c + x) = sin^2 + (x + c)^2, so lambda2 never drops below zero;
  // it touches zero at theta = pi, |eta| = 1
  const Reorganization edge = lambda2_from_eta(35.0, 1.0, kPi);
  CHECK(edge.lambda2 == doctest::Approx(0.0));
  CHECK(!edge.unphysical);
  for (int i = 0; i < 200; ++i) {
    const Reorganization r = lambda2_from_eta(35.0, testing::uniform(0, 5), testing::uniform(0, kPi));
    CHECK(r.lambda2 >= -1e-12);
  }
}

TEST_CASE("frequency renormalization") {
  const double w0 = 226.41;
  const FrequencyShift none = frequency_renormalization({}, w0, 300.0);
  CHECK(none.delta_plus == 0.0);
  CHECK(none.delta_minus == 0.0);

  const std::vector<BathMode> single{{2.0 * w0, w0 * w0}};
  const FrequencyShift s = frequency_renormalization(single, w0, 0.0);
  CHECK(s.delta_plus == doctest::Approx(w0));
  CHECK(s.delta_minus == 0.0);

  const std::vector<BathMode> pair{{w0 - 50.0, 400.0}, {w0 + 50.0, 400.0}};
  CHECK(frequency_renormalization(pair, w0, 0.0).delta_plus == doctest::Approx(0.0).epsilon(1e-12));

  // finite temperature against the summand written out
  const std::vector<BathMode> modes{{100.0, 30.0}, {400.0, 70.0}};
  const double T = 250.0;
  double plus = 0.0, minus = 0.0;
  for (const auto& m : modes) {
    const double n = 1.0 / (std::exp(m.omega / (0.69503480 * T)) - 1.0);
    plus += m.coupling2 * (n + 1.0) / (m.omega - w0);
    minus -= m.coupling2 * n / (m.omega - w0);
  }
  const FrequencyShift f = frequency_renormalization(modes, w0, T);
  CHECK(f.delta_plus == doctest::Approx(plus).epsilon(1e-12));
  CHECK(f.delta_minus == doctest::Approx(minus).epsilon(1e-12));

  const std::vector<BathMode> resonant{{w0, 1.0}};
  CHECK_THROWS_AS(frequency_renormalization(resonant, w0, 300.0), ResonantModeError);
}

TEST_CASE("frequency renormalization is additive over disjoint mode lists") {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BathMode> a, b, both;
    for (int i = 0; i < 5; ++i) a.push_back({testing::uniform(1.0, 200.0), testing::uniform(0.0, 100.0)});
    for (int i = 0; i < 7; ++i) b.push_back({testing::uniform(250.0, 900.0), testing::uniform(0.0, 100.0)});
    both = a;
    both.insert(both.end(), b.begin(), b.end());
    const double w0 = 226.41, T = testing::uniform(10.0, 400.0);
    const FrequencyShift fa = frequency_renormalization(a, w0, T);
    const FrequencyShift fb = frequency_renormalization(b, w0, T);
    const FrequencyShift fab = frequency_renormalization(both, w0, T);
    CHECK(fab.delta_plus == doctest::Approx(fa.delta_plus + fb.delta_plus).epsilon(1e-12));
    CHECK(fab.delta_minus == doctest::Approx(fa.delta_minus + fb.delta_minus).epsilon(1e-12));
  }
}

TEST_CASE("BathSpec validation") {
  BathSpec b;
  b.temperature = 300.0;
  b.gamma_d = 0.02;
  CHECK_NOTHROW(b.validate());
  b.temperature = 0.0;
  CHECK_THROWS_AS(b.validate(), DomainError);
  b.temperature = 300.0;
  b.modes.push_back({-1.0, 1.0});
  CHECK_THROWS_AS(b.validate(), DomainError);
}
