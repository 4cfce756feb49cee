#include <doctest.h>

#include <cmath>
#include <random>

#include "opabs/qfi_ideal.hpp"
#include "opabs/qfi_lossy.hpp"

using namespace opabs;

TEST_SUITE_BEGIN("qfi_lossy");

TEST_CASE("kraus coefficient table") {
  SUBCASE("lossless for any lambda") {
    for (double lam : {-1.5, -1.0, 0.0, 0.7}) {
      const auto k = kraus_coeffs(1.0, lam);
      CHECK(k.A == doctest::Approx(1.0));
      CHECK(k.B == doctest::Approx(0.0));
      CHECK(k.C == doctest::Approx(1.0));
    }
  }
  SUBCASE("lambda = -1 moves the loss before the phase") {
    const auto k = kraus_coeffs(0.35, -1.0);
    CHECK(k.A == doctest::Approx(1.0));
    CHECK(k.B == doctest::Approx(0.0));
    CHECK(k.C == doctest::Approx(1.0));
  }
  SUBCASE("eta = 0.8, lambda = 0") {
    const auto k = kraus_coeffs(0.8, 0.0);
    CHECK(k.A == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(k.B == doctest::Approx(0.16).epsilon(1e-15));
    CHECK(k.C == doctest::Approx(0.8).epsilon(1e-15));
  }
  SUBCASE("A = C^2 exactly") {
    std::mt19937 rng(79u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
      const auto k = kraus_coeffs(u(rng), -2.0 + 3.0 * u(rng));
      CHECK(k.A == k.C * k.C);
      CHECK(k.B >= 0.0);
    }
  }
}

TEST_CASE("building blocks at m = 0") {
  Params p;
  p.m = 0;
  p.g = 0.0;
  p.alpha = 1.0;
  p.eta = 0.8;
  p.tau = 0.5;
  const auto b = lossy_building_blocks(p);
  CHECK(std::abs(b.dOdag_dO) < 1e-14);
  CHECK(std::abs(b.Odag_dO) < 1e-14);
  CHECK(std::abs(b.dOdag_na_O) < 1e-14);
  // the pre-loss probe is the bare coherent state: <n_a> = |alpha|^2
  CHECK(b.na == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.na2 == doctest::Approx(2.0).epsilon(1e-12));  // coherent n^2
}

TEST_CASE("squeezed-vacuum blocks match the thermal marginal") {
  Params p;
  p.m = 0;
  p.g = 1.0;
  p.alpha = p.beta = 0.0;
  p.eta = 0.8;
  const auto b = lossy_building_blocks(p);
  const double nbar = std::sinh(1.0) * std::sinh(1.0);
  CHECK(b.na == doctest::Approx(nbar).epsilon(1e-12));
  // thermal marginal: <n^2> = 2 nbar^2 + nbar
  CHECK(b.na2 == doctest::Approx(2.0 * nbar * nbar + nbar).epsilon(1e-12));
}

TEST_CASE("C_Q of the lossy coherent probe") {
  Params p;
  p.m = 0;
  p.g = 0.0;
  p.alpha = 1.0;
  p.beta = 0.0;
  p.eta = 0.8;
  CHECK(cq_of_lambda(p, 0.0) == doctest::Approx(3.2).epsilon(1e-12));
  CHECK(cq_of_lambda(p, -1.0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("eta = 1 makes C_Q independent of lambda") {
  Params p;
  p.m = 1;
  p.g = 0.8;
  p.alpha = 1.0;
  p.eta = 1.0;
  const double ref = cq_of_lambda(p, 0.0);
  for (double lam : {-1.7, -0.4, 0.9})
    CHECK(cq_of_lambda(p, lam) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("vacuum probe carries nothing") {
  Params p;
  p.alpha = p.beta = 0.0;
  p.g = 0.0;
  p.m = 0;
  p.eta = 0.6;
  for (double lam : {-1.0, 0.0, 0.5})
    CHECK(cq_of_lambda(p, lam) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qfi_lossy(p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("lossy coherent bound: F_L = 4 eta |alpha|^2 at lambda* = 0") {
  Params p;
  p.m = 0;
  p.g = 0.0;
  p.alpha = 1.0;
  for (double eta : {0.5, 0.8, 1.0}) {
    p.eta = eta;
    const auto d = qfi_lossy_detail(p);
    CHECK(d.F_L == doctest::Approx(4.0 * eta).epsilon(1e-10));
    if (eta < 1.0) CHECK(std::abs(d.lambda_star) < 1e-9);
  }
}

TEST_CASE("lossless limit reduces to the ideal Fisher information") {
  std::mt19937 rng(83u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 8; ++rep) {
    Params p;
    p.alpha = rep % 2 ? 0.0 : 0.4 + u(rng);
    p.beta = rep % 2 ? 0.4 + u(rng) : 0.0;
    p.g = 1.1 * u(rng);
    p.tau = 0.2 + 0.6 * u(rng);
    p.phi = 0.3 + 5.0 * u(rng);
    p.eta = 1.0;
    p.m = static_cast<int>(u(rng) * 3.999);
    const double fl = qfi_lossy(p);
    const double fi = qfi_ideal(p).F;
    CHECK(fl == doctest::Approx(fi).epsilon(1e-8));
  }
}

TEST_CASE("monotone in eta and bounded by the ideal value") {
  Params p;
  p.m = 2;
  p.g = 1.0;
  p.alpha = 1.0;
  p.tau = 0.5;
  const double ideal = qfi_ideal(p).F;
  double prev = -1.0;
  for (int k = 1; k <= 10; ++k) {
    p.eta = 0.1 * k;
    const double fl = qfi_lossy(p);
    CHECK(fl >= prev - 1e-9);
    CHECK(fl <= ideal + 1e-9);
    prev = fl;
  }
}

TEST_CASE("minimizer validity against sampled lambdas") {
  std::mt19937 rng(89u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    Params p;
    p.alpha = rep % 2 ? 0.0 : 0.5 + u(rng);
    p.beta = rep % 2 ? 0.5 + u(rng) : 0.0;
    p.g = 0.3 + 0.8 * u(rng);
    p.tau = 0.25 + 0.5 * u(rng);
    p.eta = 0.4 + 0.55 * u(rng);
    p.m = static_cast<int>(u(rng) * 2.999);
    const auto d = qfi_lossy_detail(p);
    for (int k = 0; k < 50; ++k) {
      const double lam = -2.0 + 3.0 * k / 49.0;
      CHECK(cq_of_lambda(p, lam) >= d.cq_numeric - 1e-9);
    }
  }
}

TEST_SUITE_END();
