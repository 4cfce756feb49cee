#include <doctest.h>

#include <cmath>
#include <random>

#include "opabs/detection.hpp"
#include "opabs/qfi_ideal.hpp"

using namespace opabs;

TEST_SUITE_BEGIN("qfi_ideal");

TEST_CASE("squeezed-vacuum anchor: F = 4 nbar (nbar + 1)") {
  Params p;
  p.alpha = p.beta = 0.0;
  p.g = 1.0;
  p.m = 0;
  const double nbar = std::sinh(1.0) * std::sinh(1.0);
  CHECK(qfi_ideal(p).F ==
        doctest::Approx(4.0 * nbar * (nbar + 1.0)).epsilon(1e-10));
}

TEST_CASE("coherent states: F = 4 |alpha|^2 for every subtraction order") {
  Params p;
  p.alpha = 1.0;
  p.beta = 0.0;
  p.g = 0.0;
  for (int m : {0, 1, 2, 3})
    for (double tau : {0.3, 0.5, 0.8}) {
      p.m = m;
      p.tau = tau;
      CHECK(qfi_ideal(p).F == doctest::Approx(4.0).epsilon(1e-10));
    }
}

TEST_CASE("vacuum carries no phase information") {
  Params p;
  p.alpha = p.beta = 0.0;
  p.g = 0.0;
  p.m = 0;
  CHECK(qfi_ideal(p).F == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("qcrb arithmetic and domain errors") {
  CHECK(qcrb(4.0, 1) == doctest::Approx(0.5));
  CHECK(qcrb(4.0, 4) == doctest::Approx(0.25));
  const double f = 4.0 * std::sinh(1.0) * std::sinh(1.0) *
                   (std::sinh(1.0) * std::sinh(1.0) + 1.0);
  CHECK(qcrb(f, 1) == doctest::Approx(0.2757205647717832).epsilon(1e-12));
  CHECK_THROWS_AS(qcrb(0.0, 1), DomainError);
  CHECK_THROWS_AS(qcrb(-1.0, 1), DomainError);
  CHECK_THROWS_AS(qcrb(4.0, 0), UsageError);
}

TEST_CASE("gauge residue and conjugate-route consistency") {
  std::mt19937 rng(71u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    Params p;
    p.alpha = rep % 2 ? 0.0 : 0.3 + u(rng);
    p.beta = rep % 2 ? 0.3 + u(rng) : 0.0;
    p.g = 1.2 * u(rng);
    p.tau = 0.15 + 0.7 * u(rng);
    p.phi = 0.3 + 5.0 * u(rng);
    p.m = static_cast<int>(u(rng) * 3.999);
    const auto r = qfi_ideal(p);
    CHECK(r.braket_check < 1e-8);
    CHECK(r.F >= 0.0);
    // <psi|dpsi> computed through the right-insertion route must conjugate
    // the production overlap; both are purely imaginary, so their sum is ~0
    const cxd lhs = detail::qfi_ideal_overlap_conjugate_route(p);
    CHECK(std::abs(lhs.real()) < 1e-8);
  }
}

TEST_CASE("periodicity in phi is exact") {
  Params p;
  p.m = 2;
  p.phi = 1.234;
  const double f0 = qfi_ideal(p).F;
  p.phi = 1.234 + 2.0 * kPi;
  CHECK(qfi_ideal(p).F == f0);
  p.phi = 1.234 - 4.0 * kPi;
  CHECK(qfi_ideal(p).F == f0);
}

TEST_CASE("homodyne sensitivity respects the Cramer-Rao bound") {
  std::mt19937 rng(73u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    Params p;
    p.alpha = rep % 2 ? 0.0 : 0.4 + u(rng);
    p.beta = rep % 2 ? 0.4 + u(rng) : 0.0;
    p.g = 0.2 + u(rng);
    p.tau = 0.25 + 0.5 * u(rng);
    p.phi = 0.4 + 2.2 * u(rng);
    p.m = static_cast<int>(u(rng) * 3.999);
    const double dphi = phase_sensitivity(p);
    const double bound = qcrb(qfi_ideal(p).F, 1);
    CHECK(dphi >= bound - 1e-9);
  }
}

TEST_SUITE_END();
