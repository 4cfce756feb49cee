#ifndef OPABS_COEFFICIENTS_HPP
#define OPABS_COEFFICIENTS_HPP

#include <cmath>

#include "opabs/params.hpp"
#include "opabs/series.hpp"

namespace opabs {

// Closed-form coefficient tables of the generating-function exponents.
// Each table is templated on the scalar so the same expressions evaluate
// either to plain complex values or to phase jets (value + d/dphi).

// Which loss transmittance multiplies the tau-path: the detection pipeline
// carries T, the lossy-QFI / photon-number equivalent model carries eta.
enum class LossSymbol { detection_T, qfi_eta };

inline double loss_of(const Params& p, LossSymbol s) {
  return s == LossSymbol::detection_T ? p.T : p.eta;
}

template <class S>
struct DetectionCoeffs {
  S X1, X2, X3, X4;
};

template <class S>
DetectionCoeffs<S> detection_coeffs(const Params& p, LossSymbol loss) {
  using Tr = ScalarTraits<S>;
  const double L = loss_of(p, loss);
  const double rtl = std::sqrt(p.tau * L);       // sqrt(tau * loss)
  const double rmt = std::sqrt(1.0 - p.tau);     // sqrt(1 - tau)
  const double sh = std::sinh(p.g), ch = std::cosh(p.g);
  const S eip = Tr::phase(p.phi);
  const S eit = Tr::embed(phase_factor(p.theta));
  const S i = Tr::embed(cxd(0.0, 1.0));
  DetectionCoeffs<S> c{Tr::zero(), Tr::zero(), Tr::zero(), Tr::zero()};
  c.X1 = -(i * eip * eit) * (rtl * rmt * sh * ch);
  c.X2 = eip * (rtl * ch) - i * (eit * (rmt * sh));
  c.X3 = i * (rmt * ch) - eip * eit * (rtl * sh);
  c.X4 = Tr::embed(cxd((1.0 - p.tau + p.tau * L) * sh * sh, 0.0));
  return c;
}

template <class S>
struct QfiIdealCoeffs {
  S y1, y2, y3, y4, y5, y6;
};

template <class S>
QfiIdealCoeffs<S> qfi_ideal_coeffs(const Params& p) {
  using Tr = ScalarTraits<S>;
  const double rt = std::sqrt(p.tau), rmt = std::sqrt(1.0 - p.tau);
  const double sh = std::sinh(p.g), ch = std::cosh(p.g);
  const S emip = Tr::conjugate(Tr::phase(p.phi));   // e^{-i phi}
  const S emit = Tr::embed(std::conj(phase_factor(p.theta)));
  const S i = Tr::embed(cxd(0.0, 1.0));
  QfiIdealCoeffs<S> y{Tr::zero(), Tr::zero(), Tr::zero(),
                      Tr::zero(), Tr::zero(), Tr::zero()};
  y.y1 = emip * ch;
  y.y2 = -(emip * emit) * sh;
  y.y3 = emip * (rt * ch);
  y.y4 = i * emit * (rmt * sh);
  y.y5 = -(i * (rmt * ch));
  y.y6 = -(emip * emit) * (rt * sh);
  return y;
}

// Loss variants with sqrt(tau*eta) plus the two couplings specific to the
// lossy-QFI exponent.
template <class S>
struct QfiLossyCoeffs {
  S X1, X2, X3, X4, X5, X6;
};

template <class S>
QfiLossyCoeffs<S> qfi_lossy_coeffs(const Params& p) {
  using Tr = ScalarTraits<S>;
  const auto base = detection_coeffs<S>(p, LossSymbol::qfi_eta);
  const double rte = std::sqrt(p.tau * p.eta), rmt = std::sqrt(1.0 - p.tau);
  const double sh = std::sinh(p.g), ch = std::cosh(p.g);
  const S eip = Tr::phase(p.phi);
  const S eit = Tr::embed(phase_factor(p.theta));
  const S i = Tr::embed(cxd(0.0, 1.0));
  QfiLossyCoeffs<S> c{base.X1, base.X2, base.X3, base.X4,
                      Tr::zero(), Tr::zero()};
  c.X5 = eip * (rte * sh * sh);
  c.X6 = -(i * eit) * (rmt * sh * ch);
  return c;
}

// Couplings of the internal-photon-number exponent.  f11 multiplies the
// b-mode number insertions against beta; it is fixed to cosh(g) by the
// operator-algebra derivation (see docs/typo-ledger.md).
template <class S>
struct PhotonNumberCoeffs {
  S f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11;
};

template <class S>
PhotonNumberCoeffs<S> photon_number_coeffs(const Params& p) {
  using Tr = ScalarTraits<S>;
  const double rt = std::sqrt(p.tau), rmt = std::sqrt(1.0 - p.tau);
  const double rT = std::sqrt(p.T), rtT = std::sqrt(p.tau * p.T);
  const double sh = std::sinh(p.g), ch = std::cosh(p.g);
  const S eip = Tr::phase(p.phi);
  const S eit = Tr::embed(phase_factor(p.theta));
  const S i = Tr::embed(cxd(0.0, 1.0));
  PhotonNumberCoeffs<S> f{Tr::zero(), Tr::zero(), Tr::zero(), Tr::zero(),
                          Tr::zero(), Tr::zero(), Tr::zero(), Tr::zero(),
                          Tr::zero(), Tr::zero(), Tr::zero()};
  f.f1 = Tr::embed(cxd(rt * p.T * sh * sh, 0.0));
  f.f2 = -(i * eip * eit) * (rT * rmt * sh * ch);
  f.f3 = i * (rmt * sh * sh);
  f.f4 = -(eip * eit) * (rtT * sh * ch);
  f.f5 = Tr::embed(cxd(p.T * sh * sh, 0.0));
  f.f6 = -(eip * eit) * (rT * sh * ch);
  f.f7 = Tr::embed(cxd(sh * sh, 0.0));
  f.f8 = eip * (rT * ch);
  f.f9 = -(eit * sh);
  f.f10 = -(eip * eit) * (rT * sh);
  f.f11 = Tr::embed(cxd(ch, 0.0));
  return f;
}

// Concrete (complex-valued) records matching the public result types.
struct CoeffSetDetection {
  cxd X1, X2, X3, X4;
};
struct CoeffSetQfiIdeal {
  cxd y1, y2, y3, y4, y5, y6;
};
struct CoeffSetQfiLossy {
  cxd X1, X2, X3, X4, X5, X6;
};
struct CoeffSetPhotonNumber {
  cxd f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11;
};

inline CoeffSetDetection coeffs_detection(const Params& p) {
  p.validate();
  const auto c = detection_coeffs<cxd>(p, LossSymbol::detection_T);
  return {c.X1, c.X2, c.X3, c.X4};
}
inline CoeffSetQfiIdeal coeffs_qfi_ideal(const Params& p) {
  p.validate();
  const auto y = qfi_ideal_coeffs<cxd>(p);
  return {y.y1, y.y2, y.y3, y.y4, y.y5, y.y6};
}
inline CoeffSetQfiLossy coeffs_qfi_lossy(const Params& p) {
  p.validate();
  const auto c = qfi_lossy_coeffs<cxd>(p);
  return {c.X1, c.X2, c.X3, c.X4, c.X5, c.X6};
}
inline CoeffSetPhotonNumber coeffs_photon_number(const Params& p) {
  p.validate();
  const auto f = photon_number_coeffs<cxd>(p);
  return {f.f1, f.f2, f.f3, f.f4, f.f5, f.f6, f.f7, f.f8, f.f9, f.f10, f.f11};
}

}  // namespace opabs

#endif
