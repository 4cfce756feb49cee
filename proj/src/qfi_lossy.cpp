#include "opabs/qfi_lossy.hpp"

#include <cmath>
#include <iostream>

#include "opabs/exponents.hpp"
#include "opabs/phase_jet.hpp"
#include "opabs/series.hpp"

namespace opabs {

namespace {

constexpr double kImagTol = 1e-8;
constexpr double kAnnihilationTol = 1e-12;
constexpr double kLambdaLo = -2.0;  // brackets the loss-before/-after values
constexpr double kLambdaHi = 1.0;

// lambda-independent summary of the C_Q quadratic:
//   C_Q(u)/4 = G + C^2 V + B nbar + C L,  u = 1 + lambda,
//   C = 1 - u(1-eta), B = u^2 eta (1-eta).
struct CqPieces {
  double G = 0.0;     // <dPsi|dPsi> - |<dPsi|Psi>|^2
  double V = 0.0;     // variance of n_a
  double nbar = 0.0;  // mean of n_a
  double L = 0.0;     // first-order coupling of H2 to the state derivative
};

CqPieces pieces_from_blocks(const LossyBlocks& b) {
  CqPieces q;
  // w = N2'/N2 from the phase-jet of the unnormalized norm
  const double w = -0.5 * b.n2 * b.w00_dot;
  const double dd = b.n2 * b.dOdag_dO.real();  // <dO^dag dO> is real
  const cxd w0d = b.n2 * b.Odag_dO;
  const double braket2 =
      std::norm(cxd(w, 0.0) + std::conj(w0d));  // |<dPsi|Psi>|^2
  q.G = (w * w + 2.0 * w * w0d.real() + dd) - braket2;
  q.V = b.na2 - b.na * b.na;
  q.nbar = b.na;
  q.L = -2.0 * b.n2 * b.dOdag_na_O.imag() - 2.0 * b.na * w0d.imag();
  return q;
}

double cq_from_pieces(const CqPieces& q, double eta, double lambda) {
  const double u = 1.0 + lambda;
  const double C = 1.0 - u * (1.0 - eta);
  const double B = u * u * eta * (1.0 - eta);
  const double cq = 4.0 * (q.G + C * C * q.V + B * q.nbar + C * q.L);
  if (cq < -1e-10) throw ConsistencyError("C_Q is negative");
  return std::max(cq, 0.0);
}

}  // namespace

KrausCoeffs kraus_coeffs(double eta, double lambda) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw UsageError("kraus_coeffs: eta must lie in [0,1]");
  const double u = 1.0 + lambda;
  KrausCoeffs k;
  k.C = 1.0 - u * (1.0 - eta);
  k.A = k.C * k.C;
  k.B = u * u * eta * (1.0 - eta);
  return k;
}

LossyBlocks lossy_building_blocks(const Params& p) {
  p.validate();
  const int m = p.m;
  const auto z = build_z2<PhaseJet>(p);
  MomentExtractor<PhaseJet> ex(z);
  auto orders = [&](int kx, int ky) {
    return make_orders({{zvar::t, m}, {zvar::s, m}, {zvar::x, kx}, {zvar::y, ky}});
  };
  auto mono = [](std::initializer_list<std::pair<int, int>> e) {
    return make_orders(e);
  };

  const PhaseJet w00 = ex.moment(orders(0, 0));
  LossyBlocks b;
  const double norm = require_real(w00.v, kImagTol, "P_m00");
  if (norm < kAnnihilationTol) throw AnnihilatedStateError();
  b.n2 = 1.0 / norm;
  b.w00_dot = require_real(w00.d, kImagTol, "dP_m00/dphi");

  const double rte = std::sqrt(p.tau * p.eta);
  const cxd eip = phase_factor(p.phi);
  const cxd i(0.0, 1.0);
  b.dOdag_dO =
      p.tau * p.eta *
      ex.moment_prefactored(mono({{zvar::s, 1}, {zvar::t, 1}}), orders(1, 1)).v;
  b.Odag_dO =
      i * eip * rte * ex.moment_prefactored(mono({{zvar::s, 1}}), orders(0, 1)).v;
  b.dOdag_na_O = -i * std::conj(eip) * rte *
                 ex.moment_prefactored(mono({{zvar::t, 1}}), orders(2, 1)).v;
  b.na = b.n2 * require_real(ex.moment(orders(1, 1)).v, kImagTol, "<n_a>");
  b.na2 = b.na + b.n2 * require_real(ex.moment(orders(2, 2)).v, kImagTol,
                                     "<n_a^2> - <n_a>");
  if (b.na < -1e-10 || b.na2 < b.na * b.na - 1e-8)
    throw ConsistencyError("lossy blocks: photon-number moments inconsistent");

  // d/dphi of the norm must equal 2 Re <O^dag dO/dphi>
  const double cross = 2.0 * b.Odag_dO.real();
  if (std::abs(b.w00_dot * b.n2 - cross * b.n2) >
      1e-7 * std::max(1.0, std::abs(cross * b.n2)))
    throw ConsistencyError("lossy blocks: norm derivative cross-check failed");
  return b;
}

double cq_of_lambda(const Params& p, double lambda) {
  const auto q = pieces_from_blocks(lossy_building_blocks(p));
  return cq_from_pieces(q, p.eta, lambda);
}

QfiLossyDetail qfi_lossy_detail(const Params& p) {
  p.validate();
  const auto q = pieces_from_blocks(lossy_building_blocks(p));
  QfiLossyDetail r;

  // closed form: quadratic in u = 1 + lambda, minimized analytically
  const double den = (1.0 - p.eta) * q.V + p.eta * q.nbar;
  const double num = (1.0 - p.eta) * (2.0 * q.V + q.L) * (2.0 * q.V + q.L);
  double correction = 0.0;
  if (den > 1e-300) {
    correction = num / den;
    r.lambda_star = p.eta < 1.0
                        ? (2.0 * q.V + q.L) / (2.0 * den) - 1.0
                        : 0.0;
  } else if (num > 1e-12) {
    throw ConsistencyError("qfi_lossy: degenerate minimization denominator");
  }
  r.F_L = std::max(4.0 * (q.G + q.V + q.L) - correction, 0.0);

  // mandatory runtime consistency check: independent numeric minimization
  double lo = kLambdaLo, hi = kLambdaHi;
  auto cq = [&](double lam) { return cq_from_pieces(q, p.eta, lam); };
  for (int attempt = 0;; ++attempt) {
    const int kGrid = 61;
    double best = lo;
    double best_val = cq(lo);
    for (int k = 1; k < kGrid; ++k) {
      const double lam = lo + (hi - lo) * k / (kGrid - 1);
      const double val = cq(lam);
      if (val < best_val) {
        best_val = val;
        best = lam;
      }
    }
    const double step = (hi - lo) / (kGrid - 1);
    const bool on_edge = best <= lo + 0.5 * step || best >= hi - 0.5 * step;
    if (!on_edge || p.eta == 1.0 || attempt >= 6) {
      r.lambda_numeric = golden_section_minimize(
          cq, std::max(lo, best - 2.0 * step), std::min(hi, best + 2.0 * step),
          1e-10);
      r.cq_numeric = cq(r.lambda_numeric);
      break;
    }
    std::cerr << "qfi_lossy: lambda minimum at window edge, widening ["
              << lo << ", " << hi << "]\n";
    lo = lo * 2.0;
    hi = hi * 2.0;
  }
  if (std::abs(r.cq_numeric - r.F_L) > 1e-6 * std::max(1.0, std::abs(r.F_L)))
    throw ConsistencyError(
        "qfi_lossy: closed form disagrees with numeric lambda minimization");
  return r;
}

double qfi_lossy(const Params& p) { return qfi_lossy_detail(p).F_L; }

}  // namespace opabs
