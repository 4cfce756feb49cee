#include <doctest.h>

#include "opabs/phase_jet.hpp"
#include "opabs/series.hpp"

using namespace opabs;

TEST_SUITE_BEGIN("phase_jet");

TEST_CASE("product rule") {
  const PhaseJet a(cxd(1.0, 2.0), cxd(0.3, -0.1));
  const PhaseJet b(cxd(-0.5, 0.7), cxd(1.1, 0.9));
  const PhaseJet p = a * b;
  CHECK(p.v == a.v * b.v);
  CHECK(p.d == a.v * b.d + a.d * b.v);
}

TEST_CASE("exp chain rule") {
  const PhaseJet a(cxd(0.2, -0.4), cxd(0.9, 0.1));
  const PhaseJet e = exp(a);
  CHECK(std::abs(e.v - std::exp(a.v)) < 1e-15);
  CHECK(std::abs(e.d - std::exp(a.v) * a.d) < 1e-15);
}

TEST_CASE("division inverts multiplication") {
  const PhaseJet a(cxd(1.0, 2.0), cxd(0.3, -0.1));
  const PhaseJet b(cxd(-0.5, 0.7), cxd(1.1, 0.9));
  const PhaseJet q = (a * b) / b;
  CHECK(std::abs(q.v - a.v) < 1e-14);
  CHECK(std::abs(q.d - a.d) < 1e-14);
}

TEST_CASE("phase scalar carries i e^{i phi}") {
  const double phi = 0.83;
  const PhaseJet e = ScalarTraits<PhaseJet>::phase(phi);
  CHECK(std::abs(e.v - phase_factor(phi)) < 1e-15);
  CHECK(std::abs(e.d - cxd(0.0, 1.0) * phase_factor(phi)) < 1e-15);
  // conj represents e^{-i phi}: derivative -i e^{-i phi}
  const PhaseJet c = conj(e);
  CHECK(std::abs(c.d - cxd(0.0, -1.0) * std::conj(phase_factor(phi))) < 1e-15);
}

TEST_CASE("jet derivative matches finite differences through series_exp") {
  auto build = [](double phi) {
    TruncatedSeries<cxd> z({2, 2});
    const cxd e = phase_factor(phi);
    z.add_term(make_orders({{0, 1}}), 0.7 * e);
    z.add_term(make_orders({{1, 1}}), 0.7 * std::conj(e));
    z.add_term(make_orders({{0, 1}, {1, 1}}), cxd(0.4, 0.0));
    z.add_term(make_orders({{0, 2}}), cxd(0.1, 0.2) * e);
    z.add_term(make_orders({{1, 2}}), cxd(0.1, -0.2) * std::conj(e));
    return extract_derivative(z, make_orders({{0, 2}, {1, 1}}));
  };
  const double phi = 1.1, h = 1e-5;
  TruncatedSeries<PhaseJet> zj({2, 2});
  const PhaseJet e = ScalarTraits<PhaseJet>::phase(phi);
  zj.add_term(make_orders({{0, 1}}), e * 0.7);
  zj.add_term(make_orders({{1, 1}}), conj(e) * 0.7);
  zj.add_term(make_orders({{0, 1}, {1, 1}}), PhaseJet(cxd(0.4, 0.0)));
  zj.add_term(make_orders({{0, 2}}), e * cxd(0.1, 0.2));
  zj.add_term(make_orders({{1, 2}}), conj(e) * cxd(0.1, -0.2));
  const PhaseJet ext = extract_derivative(zj, make_orders({{0, 2}, {1, 1}}));
  const cxd fd = (build(phi + h) - build(phi - h)) / (2.0 * h);
  CHECK(std::abs(ext.v - build(phi)) < 1e-14);
  CHECK(std::abs(ext.d - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
}

TEST_SUITE_END();
