#include <doctest.h>

#include <complex>
#include <random>

#include "opabs/series.hpp"

using namespace opabs;

namespace {
constexpr int S = 0, T = 1;

bool close(cxd a, cxd b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}
}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("multiplication follows polynomial identities") {
  // (1+s)(1+t) = 1 + s + t + st
  TruncatedSeries<cxd> a({1, 1}), b({1, 1});
  a.add_term({}, 1.0);
  a.add_term(make_orders({{S, 1}}), 1.0);
  b.add_term({}, 1.0);
  b.add_term(make_orders({{T, 1}}), 1.0);
  const auto prod = a * b;
  CHECK(close(prod.coefficient({}), 1.0));
  CHECK(close(prod.coefficient(make_orders({{S, 1}})), 1.0));
  CHECK(close(prod.coefficient(make_orders({{T, 1}})), 1.0));
  CHECK(close(prod.coefficient(make_orders({{S, 1}, {T, 1}})), 1.0));
  CHECK(prod.terms().size() == 4);
}

TEST_CASE("multiplication drops monomials beyond caps") {
  TruncatedSeries<cxd> s({1, 1});
  s.add_term(make_orders({{S, 1}}), 1.0);
  CHECK((s * s).empty());  // s*s dies at cap s<=1
}

TEST_CASE("i*s squared is -s^2") {
  TruncatedSeries<cxd> is({2});
  is.add_term(make_orders({{S, 1}}), cxd(0.0, 1.0));
  const auto sq = is * is;
  CHECK(close(sq.coefficient(make_orders({{S, 2}})), cxd(-1.0, 0.0)));
  CHECK(sq.terms().size() == 1);
}

TEST_CASE("mismatched registries are a usage error") {
  TruncatedSeries<cxd> a({1, 1}), b({2, 1});
  a.add_term(make_orders({{S, 1}}), 1.0);
  b.add_term(make_orders({{S, 1}}), 1.0);
  CHECK_THROWS_AS(a * b, UsageError);
  CHECK_THROWS_AS(a += b, UsageError);
}

TEST_CASE("series_exp on quadratic-dying exponents") {
  TruncatedSeries<cxd> z({1, 1});
  z.add_term(make_orders({{S, 1}, {T, 1}}), 1.0);
  const auto e = series_exp(z);
  CHECK(close(e.coefficient({}), 1.0));
  CHECK(close(e.coefficient(make_orders({{S, 1}, {T, 1}})), 1.0));
  CHECK(e.terms().size() == 2);
}

TEST_CASE("series_exp of zero is one") {
  TruncatedSeries<cxd> z({2, 2});
  const auto e = series_exp(z);
  CHECK(close(e.coefficient({}), 1.0));
  CHECK(e.terms().size() == 1);
}

TEST_CASE("series_exp factors over independent variables") {
  const cxd alpha(0.7, 0.2);
  TruncatedSeries<cxd> z({1, 1});
  z.add_term(make_orders({{S, 1}}), alpha);
  z.add_term(make_orders({{T, 1}}), alpha);
  const auto e = series_exp(z);
  CHECK(close(e.coefficient(make_orders({{S, 1}})), alpha));
  CHECK(close(e.coefficient(make_orders({{T, 1}})), alpha));
  CHECK(close(e.coefficient(make_orders({{S, 1}, {T, 1}})), alpha * alpha));
}

TEST_CASE("series_exp rejects nonzero constant terms") {
  TruncatedSeries<cxd> z({1});
  z.add_term({}, 0.5);
  CHECK_THROWS_AS(series_exp(z), UsageError);
}

TEST_CASE("extract_derivative examples") {
  const cxd c(0.3, -1.1);
  {
    TruncatedSeries<cxd> z({1, 1});
    z.add_term(make_orders({{S, 1}, {T, 1}}), c);
    CHECK(close(extract_derivative(z, make_orders({{S, 1}, {T, 1}})), c));
  }
  {
    TruncatedSeries<cxd> z({2});
    z.add_term(make_orders({{S, 2}}), c);  // X1 s^2
    CHECK(close(extract_derivative(z, make_orders({{S, 2}})), 2.0 * c));
  }
  {
    const cxd alpha(1.3, 0.4);
    TruncatedSeries<cxd> z({3});
    z.add_term(make_orders({{S, 1}}), alpha);
    CHECK(close(extract_derivative(z, make_orders({{S, 3}})),
                alpha * alpha * alpha));
  }
}

TEST_CASE("extract_derivative validates orders against caps") {
  TruncatedSeries<cxd> z({1, 1});
  z.add_term(make_orders({{S, 1}}), 1.0);
  CHECK_THROWS_AS(extract_derivative(z, make_orders({{S, 2}})), UsageError);
}

TEST_CASE("prefactored extraction") {
  {
    // prefactor st over exp(0): D_{1,1} = 1
    TruncatedSeries<cxd> pre({1, 1}), z({1, 1});
    pre.add_term(make_orders({{S, 1}, {T, 1}}), 1.0);
    CHECK(close(
        extract_from_prefactored(pre, z, make_orders({{S, 1}, {T, 1}})), 1.0));
  }
  {
    // prefactor s over exp(t beta): orders (s:1, t:1) -> beta
    const cxd beta(0.8, 0.0);
    TruncatedSeries<cxd> pre({1, 1}), z({1, 1});
    pre.add_term(make_orders({{S, 1}}), 1.0);
    z.add_term(make_orders({{T, 1}}), beta);
    CHECK(close(
        extract_from_prefactored(pre, z, make_orders({{S, 1}, {T, 1}})), beta));
  }
  {
    // st * exp(st X4), orders (2,2): brute-force expansion gives 2!2! X4
    const cxd x4(0.9, 0.0);
    TruncatedSeries<cxd> pre({2, 2}), z({2, 2});
    pre.add_term(make_orders({{S, 1}, {T, 1}}), 1.0);
    z.add_term(make_orders({{S, 1}, {T, 1}}), x4);
    CHECK(close(
        extract_from_prefactored(pre, z, make_orders({{S, 2}, {T, 2}})),
        4.0 * x4));
  }
}

TEST_CASE("extractor matches the free functions") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  TruncatedSeries<cxd> z({2, 2});
  z.add_term(make_orders({{S, 1}}), cxd(u(rng), u(rng)));
  z.add_term(make_orders({{T, 1}}), cxd(u(rng), u(rng)));
  z.add_term(make_orders({{S, 1}, {T, 1}}), cxd(u(rng), u(rng)));
  z.add_term(make_orders({{S, 2}}), cxd(u(rng), u(rng)));
  MomentExtractor<cxd> ex(z);
  for (int ks = 0; ks <= 2; ++ks)
    for (int kt = 0; kt <= 2; ++kt) {
      const auto orders = make_orders({{S, ks}, {T, kt}});
      CHECK(close(ex.moment(orders), extract_derivative(z, orders)));
    }
  TruncatedSeries<cxd> pre({2, 2});
  pre.add_term(make_orders({{S, 1}}), 1.0);
  const auto orders = make_orders({{S, 2}, {T, 1}});
  CHECK(close(ex.moment_prefactored(make_orders({{S, 1}}), orders),
              extract_from_prefactored(pre, z, orders)));
}

TEST_CASE("conjugation symmetry of hermitian exponents") {
  // Z(s,t)* = Z(t,s) implies extraction(k,l) = conj(extraction(l,k))
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (int rep = 0; rep < 10; ++rep) {
    TruncatedSeries<cxd> z({3, 3});
    const cxd x1(u(rng), u(rng)), x2(u(rng), u(rng));
    const double x4 = u(rng);
    z.add_term(make_orders({{S, 2}}), x1);
    z.add_term(make_orders({{T, 2}}), std::conj(x1));
    z.add_term(make_orders({{S, 1}}), x2);
    z.add_term(make_orders({{T, 1}}), std::conj(x2));
    z.add_term(make_orders({{S, 1}, {T, 1}}), x4);
    MomentExtractor<cxd> ex(z);
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) {
        const cxd a = ex.moment(make_orders({{T, k}, {S, l}}));
        const cxd b = ex.moment(make_orders({{T, l}, {S, k}}));
        CHECK(close(a, std::conj(b), 1e-12));
      }
  }
}

TEST_CASE("exp homomorphism on random exponents") {
  std::mt19937 rng(13u);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int rep = 0; rep < 25; ++rep) {
    TruncatedSeries<cxd> a({3, 2, 2, 1}), b({3, 2, 2, 1});
    for (int v0 = 0; v0 <= 3; ++v0)
      for (int v1 = 0; v1 <= 2; ++v1)
        for (int v2 = 0; v2 <= 2; ++v2)
          for (int v3 = 0; v3 <= 1; ++v3) {
            if (v0 + v1 + v2 + v3 == 0 || v0 + v1 + v2 + v3 > 3) continue;
            const auto idx =
                make_orders({{0, v0}, {1, v1}, {2, v2}, {3, v3}});
            if (u(rng) > 0.0) a.add_term(idx, cxd(u(rng), u(rng)));
            if (u(rng) > 0.0) b.add_term(idx, cxd(u(rng), u(rng)));
          }
    const auto lhs = series_exp(a + b);
    const auto rhs = series_exp(a) * series_exp(b);
    for (const auto& [idx, c] : lhs.terms())
      CHECK(std::abs(c - rhs.coefficient(idx)) <=
            1e-12 * std::max(1.0, std::abs(c)));
    for (const auto& [idx, c] : rhs.terms())
      CHECK(std::abs(c - lhs.coefficient(idx)) <=
            1e-12 * std::max(1.0, std::abs(c)));
  }
}

TEST_SUITE_END();
