#include <doctest.h>

#include <cmath>

#include "opabs/fock.hpp"
#include "opabs/oracle.hpp"

using namespace opabs;

TEST_SUITE_BEGIN("fock");

TEST_CASE("beam splitter convention on a single photon") {
  FockState psi(2, 8);
  psi.data()[psi.stride(0)] = 1.0;  // |1,0>
  apply_beam_splitter_i(psi, 0, 1, 0.7);
  CHECK(std::abs(psi.data()[psi.stride(0)] - std::sqrt(0.7)) < 1e-12);
  CHECK(std::abs(psi.data()[psi.stride(1)] - cxd(0.0, std::sqrt(0.3))) < 1e-12);
  CHECK(psi.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("loss splitter is real-orthogonal") {
  FockState psi(3, 6);
  psi.data()[psi.stride(0)] = 1.0;  // |1,0,0>
  apply_beam_splitter_real(psi, 0, 2, 0.4);
  CHECK(std::abs(psi.data()[psi.stride(0)] - std::sqrt(0.4)) < 1e-12);
  CHECK(std::abs(psi.data()[psi.stride(2)] - std::sqrt(0.6)) < 1e-12);
}

TEST_CASE("two-mode squeezed vacuum marginal") {
  FockState psi = product_coherent(2, 40, 0.0, 0.0);
  apply_two_mode_squeeze(psi, 0, 1, 1.0, kPi);
  CHECK(psi.squared_norm() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(expect_number(psi, 0) ==
        doctest::Approx(std::sinh(1.0) * std::sinh(1.0)).epsilon(1e-10));
}

TEST_CASE("phase operator is diagonal and norm-preserving") {
  FockState psi = product_coherent(2, 30, 1.0, 0.5);
  const double n0 = psi.squared_norm();
  apply_phase(psi, 0, 1.37);
  CHECK(psi.squared_norm() == doctest::Approx(n0).epsilon(1e-14));
  // phases cancel in number expectations
  CHECK(expect_number(psi, 0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("unitarity of the full chain") {
  FockState psi = product_coherent(3, 24, 0.8, 0.3);
  const double n0 = psi.squared_norm();
  apply_two_mode_squeeze(psi, 0, 1, 0.9, kPi);
  apply_beam_splitter_real(psi, 0, 2, 0.75);
  apply_phase(psi, 0, 0.6);
  apply_beam_splitter_i(psi, 0, 1, 0.35);
  CHECK(psi.squared_norm() == doctest::Approx(n0).epsilon(1e-10));
}

TEST_CASE("coherent state is an eigenstate of annihilation") {
  FockState psi = product_coherent(2, 30, 0.9, 0.0);
  const cxd a = expect_ladder(psi, 0, 0, 1);
  CHECK(std::abs(a - cxd(0.9, 0.0)) < 1e-10);
  const double w = apply_subtraction(psi, 0, 1);
  CHECK(w == doctest::Approx(0.81).epsilon(1e-9));
}

TEST_CASE("subtraction weight decreases with order") {
  Params p;
  p.g = 0.9;
  p.alpha = 1.0;
  p.tau = 0.4;
  double prev = 1.0;
  for (int m : {1, 2, 3, 4}) {
    p.m = m;
    const FockState out = evolve_output_state(p, 40);
    CHECK(out.subtraction_weight < prev);
    prev = out.subtraction_weight;
  }
}

TEST_CASE("evolved output state matches a coherent calculation") {
  Params p;
  p.g = 0.0;
  p.alpha = 1.0;
  p.tau = 0.5;
  p.phi = 0.0;
  p.m = 0;
  const FockState out = evolve_output_state(p, 30);
  CHECK(std::abs(expect_ladder(out, 0, 0, 1) - std::sqrt(0.5)) < 1e-10);
}

TEST_CASE("annihilation is detected") {
  Params p;
  p.alpha = 0.0;
  p.beta = 1.0;
  p.g = 0.0;
  p.tau = 1.0;
  p.m = 1;
  CHECK_THROWS_AS(evolve_output_state(p, 20), AnnihilatedStateError);
}

TEST_CASE("cutoff too small is reported") {
  Params p;
  p.g = 1.2;
  p.alpha = 1.5;
  CHECK_THROWS_AS(evolve_output_state(p, 8), CutoffError);
}

TEST_CASE("oracle sensitivity converges in the cutoff") {
  Params p;
  p.g = 1.0;
  p.alpha = 1.0;
  p.m = 1;
  const auto a = oracle_phase_sensitivity(p, 30);
  const auto b = oracle_phase_sensitivity(p, 40);
  CHECK(std::abs(a.value - b.value) < 1e-8 * std::max(1.0, b.value));
}

TEST_SUITE_END();
