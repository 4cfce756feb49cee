#ifndef OPABS_EXPONENTS_HPP
#define OPABS_EXPONENTS_HPP

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "opabs/coefficients.hpp"
#include "opabs/params.hpp"
#include "opabs/series.hpp"

namespace opabs {

// Canonical construction of the generating-function exponents.
//
// Every quantity in the pipeline reduces to a vacuum/coherent expectation of
// an ordered product of exponentials of operators that are LINEAR in the mode
// ladder operators:
//
//   <in| e^{v1 F1} e^{v2 F2} ... e^{vk Fk} |in> = exp(Z(v1..vk)),
//
//   Z = sum_i v_i <F_i>  +  sum_i v_i^2 (1/2)[F_i^-, F_i^+]
//       + sum_{i<j} v_i v_j [F_i^-, F_j^+],
//
// where F^- / F^+ are the annihilation / creation parts, [.,.] the c-number
// commutator, and <F> the coherent eigenvalue.  The forms F_i are obtained by
// Heisenberg conjugation of the bare ladder operators through the optical
// elements, so the exponents are derived from the operator algebra instead of
// being transcribed.  (The transcribed variants live in reference_forms.hpp
// and are equality-tested against these.)

inline constexpr int kModeA = 0;
inline constexpr int kModeB = 1;
inline constexpr int kModeV = 2;  // loss/vacuum ancilla
inline constexpr int kModeCount = 3;

template <class S>
struct LadderForm {
  std::array<S, kModeCount> ann{};  // coefficients of a_m
  std::array<S, kModeCount> cre{};  // coefficients of a_m^dagger

  LadderForm() {
    ann.fill(ScalarTraits<S>::zero());
    cre.fill(ScalarTraits<S>::zero());
  }

  static LadderForm annihilator(int mode) {
    LadderForm f;
    f.ann[static_cast<std::size_t>(mode)] = ScalarTraits<S>::one();
    return f;
  }

  LadderForm dagger() const {
    LadderForm f;
    for (std::size_t m = 0; m < kModeCount; ++m) {
      f.ann[m] = ScalarTraits<S>::conjugate(cre[m]);
      f.cre[m] = ScalarTraits<S>::conjugate(ann[m]);
    }
    return f;
  }

  LadderForm& operator+=(const LadderForm& o) {
    for (std::size_t m = 0; m < kModeCount; ++m) {
      ann[m] += o.ann[m];
      cre[m] += o.cre[m];
    }
    return *this;
  }
  LadderForm scaled(const S& c) const {
    LadderForm f;
    for (std::size_t m = 0; m < kModeCount; ++m) {
      f.ann[m] = ann[m] * c;
      f.cre[m] = cre[m] * c;
    }
    return f;
  }
};

// Heisenberg maps F -> U^dag F U for the elementary optical elements.

// phase shifter on `mode`: a -> e^{i phi} a
template <class S>
LadderForm<S> conj_phase(LadderForm<S> f, int mode, double phi) {
  const S e = ScalarTraits<S>::phase(phi);
  const auto m = static_cast<std::size_t>(mode);
  f.ann[m] = f.ann[m] * e;
  f.cre[m] = f.cre[m] * ScalarTraits<S>::conjugate(e);
  return f;
}

// beam splitter with the i-phase convention:
//   a1 -> sqrt(t) a1 + i sqrt(1-t) a2,  a2 -> i sqrt(1-t) a1 + sqrt(t) a2
template <class S>
LadderForm<S> conj_bs_i(const LadderForm<S>& f, int m1, int m2, double t) {
  const double rt = std::sqrt(t), rm = std::sqrt(1.0 - t);
  const S i = ScalarTraits<S>::embed(cxd(0.0, 1.0));
  const S mi = ScalarTraits<S>::embed(cxd(0.0, -1.0));
  LadderForm<S> r = f;
  const auto p = static_cast<std::size_t>(m1), q = static_cast<std::size_t>(m2);
  r.ann[p] = f.ann[p] * rt + f.ann[q] * (i * rm);
  r.ann[q] = f.ann[p] * (i * rm) + f.ann[q] * rt;
  r.cre[p] = f.cre[p] * rt + f.cre[q] * (mi * rm);
  r.cre[q] = f.cre[p] * (mi * rm) + f.cre[q] * rt;
  return r;
}

// beam splitter with real-orthogonal convention (loss model):
//   a1 -> sqrt(t) a1 + sqrt(1-t) a2,  a2 -> -sqrt(1-t) a1 + sqrt(t) a2
template <class S>
LadderForm<S> conj_bs_real(const LadderForm<S>& f, int m1, int m2, double t) {
  const double rt = std::sqrt(t), rm = std::sqrt(1.0 - t);
  LadderForm<S> r = f;
  const auto p = static_cast<std::size_t>(m1), q = static_cast<std::size_t>(m2);
  r.ann[p] = f.ann[p] * rt + f.ann[q] * (-rm);
  r.ann[q] = f.ann[p] * rm + f.ann[q] * rt;
  r.cre[p] = f.cre[p] * rt + f.cre[q] * (-rm);
  r.cre[q] = f.cre[p] * rm + f.cre[q] * rt;
  return r;
}

// two-mode squeezer S = exp(xi* a1 a2 - xi a1^dag a2^dag), xi = g e^{i theta}:
//   a1 -> a1 cosh g - e^{i theta} a2^dag sinh g   (and 1 <-> 2)
template <class S>
LadderForm<S> conj_tms(const LadderForm<S>& f, int m1, int m2, double g,
                       double theta) {
  const double ch = std::cosh(g), sh = std::sinh(g);
  const S eit = ScalarTraits<S>::embed(phase_factor(theta));
  const S emit = ScalarTraits<S>::embed(std::conj(phase_factor(theta)));
  LadderForm<S> r = f;
  const auto p = static_cast<std::size_t>(m1), q = static_cast<std::size_t>(m2);
  // a_p -> a_p ch - eit a_q^dag sh ; a_p^dag -> a_p^dag ch - emit a_q sh
  r.ann[p] = f.ann[p] * ch + f.cre[q] * (-(emit * sh));
  r.cre[q] = f.cre[q] * ch + f.ann[p] * (-(eit * sh));
  r.ann[q] = f.ann[q] * ch + f.cre[p] * (-(emit * sh));
  r.cre[p] = f.cre[p] * ch + f.ann[q] * (-(eit * sh));
  return r;
}

template <class S>
struct OrderedForm {
  int var;  // series variable this factor's parameter maps to
  LadderForm<S> form;
};

// The contraction formula quoted above.  Forms are listed in operator order,
// leftmost factor first.  amps are the (real) coherent amplitudes per mode.
template <class S>
TruncatedSeries<S> gaussian_generating_exponent(
    const std::vector<OrderedForm<S>>& forms,
    const std::array<double, kModeCount>& amps, std::vector<int> caps) {
  TruncatedSeries<S> z(std::move(caps));
  const int n = static_cast<int>(forms.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (forms[static_cast<std::size_t>(i)].var ==
          forms[static_cast<std::size_t>(j)].var)
        throw UsageError("gaussian exponent: duplicate variable");
  for (int i = 0; i < n; ++i) {
    const auto& [vi, fi] = forms[static_cast<std::size_t>(i)];
    // linear: coherent eigenvalue (amplitudes real, v-mode vacuum)
    S lin = ScalarTraits<S>::zero();
    for (std::size_t m = 0; m < kModeCount; ++m)
      lin += (fi.ann[m] + fi.cre[m]) * amps[m];
    z.add_term(make_orders({{vi, 1}}), lin);
    // self contraction: (1/2)[F^-, F^+]
    S self = ScalarTraits<S>::zero();
    for (std::size_t m = 0; m < kModeCount; ++m)
      self += fi.ann[m] * fi.cre[m];
    z.add_term(make_orders({{vi, 2}}), self * 0.5);
    // cross contractions with factors to the right
    for (int j = i + 1; j < n; ++j) {
      const auto& [vj, fj] = forms[static_cast<std::size_t>(j)];
      S cross = ScalarTraits<S>::zero();
      for (std::size_t m = 0; m < kModeCount; ++m)
        cross += fi.ann[m] * fj.cre[m];
      z.add_term(make_orders({{vi, 1}, {vj, 1}}), cross);
    }
  }
  return z;
}

// Series variable layouts.  All exponents put s first and t second; the extra
// variables carry the first-order number-operator insertions.
namespace zvar {
inline constexpr int s = 0;
inline constexpr int t = 1;
// ideal-QFI exponent
inline constexpr int c = 2, d = 3, p = 4, h = 5;
// lossy-QFI exponent
inline constexpr int x = 2, y = 3;
// photon-number exponent (a^dag a and b^dag b insertion pairs)
inline constexpr int u1 = 2, u2 = 3, u3 = 4, u4 = 5;
}  // namespace zvar

namespace detail {
// Testing hook: flips the sign of the s*t coefficient of the detection
// exponent; used to prove the validation suite catches a corrupted model.
bool& detection_x4_sign_flip();
}  // namespace detail

// Z0 over (s, t): exponent of the subtracted-output moment generating
// function.  With LossSymbol::detection_T the chain is
// B_v U_phi B_T S_g acting on |alpha, beta, 0>; with qfi_eta it is the
// equivalent pre-loss operator (phase and sqrt(tau*eta) folded into the
// annihilator combination) conjugated through S_g alone.  Both yield the same
// seven-term quadratic with the corresponding loss transmittance.
template <class S>
TruncatedSeries<S> build_z0(const Params& p, LossSymbol loss, int cap_s,
                            int cap_t) {
  LadderForm<S> a;
  if (loss == LossSymbol::detection_T) {
    a = LadderForm<S>::annihilator(kModeA);
    a = conj_bs_i(a, kModeA, kModeB, p.tau);
    a = conj_phase(a, kModeA, p.phi);
    a = conj_bs_real(a, kModeA, kModeV, p.T);
    a = conj_tms(a, kModeA, kModeB, p.g, p.theta);
  } else {
    const S eip = ScalarTraits<S>::phase(p.phi);
    auto base = LadderForm<S>::annihilator(kModeA).scaled(
        eip * std::sqrt(p.tau * p.eta));
    base += LadderForm<S>::annihilator(kModeB).scaled(
        ScalarTraits<S>::embed(cxd(0.0, std::sqrt(1.0 - p.tau))));
    a = conj_tms(base, kModeA, kModeB, p.g, p.theta);
  }
  std::vector<OrderedForm<S>> forms{{zvar::t, a.dagger()}, {zvar::s, a}};
  auto z = gaussian_generating_exponent<S>(forms, {p.alpha, p.beta, 0.0},
                                           {cap_s, cap_t});
  if (loss == LossSymbol::detection_T && detail::detection_x4_sign_flip()) {
    const auto st = make_orders({{zvar::s, 1}, {zvar::t, 1}});
    z.add_term(st, z.coefficient(st) * (-2.0));
  }
  return z;
}

// Z1 over (s, t, c, d, p, h): ideal-QFI exponent.  L = sqrt(tau) a +
// i sqrt(1-tau) b generates the non-local subtraction; (c,d) and (p,h)
// generate one a^dag a insertion left resp. right of L^dag^m L^m.  All
// operators are conjugated through U_phi S_g.
template <class S>
TruncatedSeries<S> build_z1(const Params& p) {
  auto through = [&](LadderForm<S> f) {
    f = conj_phase(f, kModeA, p.phi);
    return conj_tms(f, kModeA, kModeB, p.g, p.theta);
  };
  auto a = through(LadderForm<S>::annihilator(kModeA));
  auto l0 = LadderForm<S>::annihilator(kModeA).scaled(
      ScalarTraits<S>::embed(cxd(std::sqrt(p.tau), 0.0)));
  l0 += LadderForm<S>::annihilator(kModeB).scaled(
      ScalarTraits<S>::embed(cxd(0.0, std::sqrt(1.0 - p.tau))));
  auto l = through(l0);
  std::vector<OrderedForm<S>> forms{{zvar::c, a.dagger()}, {zvar::d, a},
                                    {zvar::t, l.dagger()}, {zvar::s, l},
                                    {zvar::p, a.dagger()}, {zvar::h, a}};
  return gaussian_generating_exponent<S>(forms, {p.alpha, p.beta, 0.0},
                                         {p.m, p.m, 1, 1, 1, 1});
}

// Z2 over (s, t, x, y): lossy-QFI exponent.  K = e^{i phi} sqrt(tau eta) a +
// i sqrt(1-tau) b is the pre-loss equivalent of the subtraction; (x, y)
// generate the a^dag / a insertions of the number operator.  Conjugation is
// through S_g only (the phase rides inside K).
template <class S>
TruncatedSeries<S> build_z2(const Params& p) {
  const S eip = ScalarTraits<S>::phase(p.phi);
  auto k0 = LadderForm<S>::annihilator(kModeA).scaled(
      eip * std::sqrt(p.tau * p.eta));
  k0 += LadderForm<S>::annihilator(kModeB).scaled(
      ScalarTraits<S>::embed(cxd(0.0, std::sqrt(1.0 - p.tau))));
  auto k = conj_tms(k0, kModeA, kModeB, p.g, p.theta);
  auto a = conj_tms(LadderForm<S>::annihilator(kModeA), kModeA, kModeB, p.g,
                    p.theta);
  std::vector<OrderedForm<S>> forms{{zvar::t, k.dagger()},
                                    {zvar::x, a.dagger()},
                                    {zvar::y, a},
                                    {zvar::s, k}};
  return gaussian_generating_exponent<S>(forms, {p.alpha, p.beta, 0.0},
                                         {p.m, p.m, 2, 2});
}

// Z3 over (s, t, u1..u4): internal-photon-number exponent.  The chain is
// U_phi B_T S_g on three modes; L^m implements the non-local subtraction and
// (u1,u2) / (u3,u4) insert a^dag a / b^dag b.
template <class S>
TruncatedSeries<S> build_z3(const Params& p) {
  auto through = [&](LadderForm<S> f) {
    f = conj_phase(f, kModeA, p.phi);
    f = conj_bs_real(f, kModeA, kModeV, p.T);
    return conj_tms(f, kModeA, kModeB, p.g, p.theta);
  };
  auto a = through(LadderForm<S>::annihilator(kModeA));
  auto b = through(LadderForm<S>::annihilator(kModeB));
  auto l0 = LadderForm<S>::annihilator(kModeA).scaled(
      ScalarTraits<S>::embed(cxd(std::sqrt(p.tau), 0.0)));
  l0 += LadderForm<S>::annihilator(kModeB).scaled(
      ScalarTraits<S>::embed(cxd(0.0, std::sqrt(1.0 - p.tau))));
  auto l = through(l0);
  std::vector<OrderedForm<S>> forms{{zvar::t, l.dagger()}, {zvar::u1, a.dagger()},
                                    {zvar::u2, a},         {zvar::u3, b.dagger()},
                                    {zvar::u4, b},         {zvar::s, l}};
  return gaussian_generating_exponent<S>(forms, {p.alpha, p.beta, 0.0},
                                         {p.m, p.m, 1, 1, 1, 1});
}

}  // namespace opabs

#endif
