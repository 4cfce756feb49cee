#ifndef OPABS_REFERENCE_FORMS_HPP
#define OPABS_REFERENCE_FORMS_HPP

#include "opabs/exponents.hpp"

namespace opabs {

// Transcribed forms of the generating-function exponents, kept as a
// reference mode alongside the canonical operator-algebra builders.  The
// production pipeline never calls these; tests assert term-by-term equality
// with build_z0..build_z3, which is what arbitrates the transcription defects
// listed in docs/typo-ledger.md (corrected readings are applied here and
// documented there).

template <class S>
TruncatedSeries<S> reference_z0(const Params& p, LossSymbol loss, int cap_s,
                                int cap_t) {
  using Tr = ScalarTraits<S>;
  const auto c = detection_coeffs<S>(p, loss);
  TruncatedSeries<S> z({cap_s, cap_t});
  z.add_term(make_orders({{zvar::s, 2}}), c.X1);
  z.add_term(make_orders({{zvar::t, 2}}), Tr::conjugate(c.X1));
  z.add_term(make_orders({{zvar::s, 1}}), c.X2 * p.alpha + c.X3 * p.beta);
  z.add_term(make_orders({{zvar::t, 1}}),
             Tr::conjugate(c.X2) * p.alpha + Tr::conjugate(c.X3) * p.beta);
  z.add_term(make_orders({{zvar::s, 1}, {zvar::t, 1}}), c.X4);
  return z;
}

template <class S>
TruncatedSeries<S> reference_z1(const Params& p) {
  using Tr = ScalarTraits<S>;
  namespace v = zvar;
  Params ideal = p;
  ideal.T = 1.0;
  const auto X = detection_coeffs<S>(ideal, LossSymbol::detection_T);
  const auto Y = qfi_ideal_coeffs<S>(p);
  const auto cj = [](const S& a) { return Tr::conjugate(a); };
  TruncatedSeries<S> z({p.m, p.m, 1, 1, 1, 1});
  auto add = [&](std::initializer_list<std::pair<int, int>> idx, const S& cc) {
    z.add_term(make_orders(idx), cc);
  };
  // base quadratic; as transcribed the s*t coefficient is (1-tau) sinh^2 g,
  // the remaining tau sinh^2 g arriving through the t*y6*s*y6c term below
  const double sh = std::sinh(p.g);
  add({{v::s, 2}}, X.X1);
  add({{v::t, 2}}, cj(X.X1));
  add({{v::s, 1}}, X.X2 * p.alpha + X.X3 * p.beta);
  add({{v::t, 1}}, cj(X.X2) * p.alpha + cj(X.X3) * p.beta);
  add({{v::s, 1}, {v::t, 1}}, Tr::embed(cxd((1.0 - p.tau) * sh * sh, 0.0)));
  // quadratic couplings
  add({{v::p, 1}, {v::s, 1}}, Y.y1 * cj(Y.y3));
  add({{v::t, 1}, {v::p, 1}}, Y.y1 * Y.y4);
  add({{v::d, 1}, {v::p, 1}}, cj(Y.y1) * Y.y1);
  add({{v::d, 1}, {v::t, 1}}, cj(Y.y1) * Y.y3);
  add({{v::d, 1}, {v::s, 1}}, cj(Y.y1) * cj(Y.y4));
  add({{v::h, 1}, {v::p, 1}}, cj(Y.y2) * Y.y2);
  add({{v::h, 1}, {v::s, 1}}, cj(Y.y2) * cj(Y.y5));
  add({{v::t, 1}, {v::h, 1}}, Y.y6 * cj(Y.y2));
  add({{v::t, 1}, {v::s, 1}}, Y.y6 * cj(Y.y6));
  add({{v::c, 1}, {v::d, 1}}, Y.y2 * cj(Y.y2));
  add({{v::c, 1}, {v::h, 1}}, Y.y2 * cj(Y.y2));
  add({{v::c, 1}, {v::t, 1}}, Y.y2 * Y.y5);
  add({{v::c, 1}, {v::s, 1}}, Y.y2 * cj(Y.y6));
  // coherent-amplitude couplings
  add({{v::c, 1}}, Y.y1 * p.alpha + Y.y2 * p.beta);
  add({{v::p, 1}}, Y.y1 * p.alpha + Y.y2 * p.beta);
  add({{v::d, 1}}, cj(Y.y1) * p.alpha + cj(Y.y2) * p.beta);
  add({{v::h, 1}}, cj(Y.y1) * p.alpha + cj(Y.y2) * p.beta);
  return z;
}

template <class S>
TruncatedSeries<S> reference_z2(const Params& p) {
  using Tr = ScalarTraits<S>;
  namespace v = zvar;
  const auto X = qfi_lossy_coeffs<S>(p);
  const auto cj = [](const S& a) { return Tr::conjugate(a); };
  const double sh = std::sinh(p.g), ch = std::cosh(p.g);
  const S eit = Tr::embed(phase_factor(p.theta));
  const S emit = Tr::embed(std::conj(phase_factor(p.theta)));
  TruncatedSeries<S> z({p.m, p.m, 2, 2});
  auto add = [&](std::initializer_list<std::pair<int, int>> idx, const S& cc) {
    z.add_term(make_orders(idx), cc);
  };
  add({{v::s, 2}}, X.X1);
  add({{v::t, 2}}, cj(X.X1));
  add({{v::s, 1}}, X.X2 * p.alpha + X.X3 * p.beta);
  add({{v::t, 1}}, cj(X.X2) * p.alpha + cj(X.X3) * p.beta);
  add({{v::s, 1}, {v::t, 1}}, X.X4);
  add({{v::s, 1}, {v::x, 1}}, X.X5);
  add({{v::t, 1}, {v::y, 1}}, cj(X.X5));
  add({{v::s, 1}, {v::y, 1}}, X.X6);
  add({{v::t, 1}, {v::x, 1}}, cj(X.X6));
  add({{v::x, 1}, {v::y, 1}}, Tr::embed(cxd(sh * sh, 0.0)));
  add({{v::x, 1}}, Tr::embed(cxd(ch * p.alpha, 0.0)) - emit * (sh * p.beta));
  add({{v::y, 1}}, Tr::embed(cxd(ch * p.alpha, 0.0)) - eit * (sh * p.beta));
  return z;
}

template <class S>
TruncatedSeries<S> reference_z3(const Params& p) {
  using Tr = ScalarTraits<S>;
  namespace v = zvar;
  const auto X = detection_coeffs<S>(p, LossSymbol::detection_T);
  const auto F = photon_number_coeffs<S>(p);
  const auto cj = [](const S& a) { return Tr::conjugate(a); };
  TruncatedSeries<S> z({p.m, p.m, 1, 1, 1, 1});
  auto add = [&](std::initializer_list<std::pair<int, int>> idx, const S& cc) {
    z.add_term(make_orders(idx), cc);
  };
  add({{v::s, 2}}, X.X1);
  add({{v::t, 2}}, cj(X.X1));
  add({{v::s, 1}}, X.X2 * p.alpha + X.X3 * p.beta);
  add({{v::t, 1}}, cj(X.X2) * p.alpha + cj(X.X3) * p.beta);
  add({{v::s, 1}, {v::t, 1}}, X.X4);
  add({{v::s, 1}, {v::u1, 1}}, F.f1);
  add({{v::s, 1}, {v::u2, 1}}, F.f2);
  add({{v::s, 1}, {v::u3, 1}}, F.f3);
  add({{v::s, 1}, {v::u4, 1}}, F.f4);
  add({{v::t, 1}, {v::u2, 1}}, cj(F.f1));
  add({{v::t, 1}, {v::u1, 1}}, cj(F.f2));
  add({{v::t, 1}, {v::u4, 1}}, cj(F.f3));
  add({{v::t, 1}, {v::u3, 1}}, cj(F.f4));
  add({{v::u1, 1}, {v::u2, 1}}, F.f5);
  add({{v::u2, 1}, {v::u4, 1}}, F.f6);
  add({{v::u1, 1}, {v::u3, 1}}, cj(F.f6));
  add({{v::u3, 1}, {v::u4, 1}}, F.f7);
  add({{v::u1, 1}}, cj(F.f8) * p.alpha + cj(F.f10) * p.beta);
  add({{v::u2, 1}}, F.f8 * p.alpha + F.f10 * p.beta);
  add({{v::u3, 1}}, cj(F.f9) * p.alpha + F.f11 * p.beta);
  add({{v::u4, 1}}, F.f9 * p.alpha + F.f11 * p.beta);
  return z;
}

}  // namespace opabs

#endif
