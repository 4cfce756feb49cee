#include "opabs/qfi_ideal.hpp"

#include <cmath>
#include <limits>

#include "opabs/exponents.hpp"
#include "opabs/phase_jet.hpp"
#include "opabs/series.hpp"

namespace opabs {

namespace {

constexpr double kImagTol = 1e-8;
constexpr double kAnnihilationTol = 1e-12;
constexpr double kGaugeTol = 1e-8;

struct IdealExtractions {
  double W = 0.0;       // D_{m,0,0,0,0}
  double Wdot = 0.0;    // d/dphi of the normalizer
  cxd D1111{};          // <n L^dag^m L^m n>
  cxd D1100{};          // <n L^dag^m L^m>
  cxd D0011{};          // <L^dag^m L^m n>
};

IdealExtractions extract(const Params& p) {
  const auto z = build_z1<PhaseJet>(p);
  MomentExtractor<PhaseJet> ex(z);
  const int m = p.m;
  auto orders = [&](int cd, int ph) {
    return make_orders({{zvar::t, m},
                        {zvar::s, m},
                        {zvar::c, cd},
                        {zvar::d, cd},
                        {zvar::p, ph},
                        {zvar::h, ph}});
  };
  IdealExtractions e;
  const PhaseJet w = ex.moment(orders(0, 0));
  e.W = require_real(w.v, kImagTol, "D_m0000");
  e.Wdot = require_real(w.d, kImagTol, "dD_m0000/dphi");
  if (e.W < kAnnihilationTol) throw AnnihilatedStateError();
  e.D1111 = ex.moment(orders(1, 1)).v;
  e.D1100 = ex.moment(orders(1, 0)).v;
  e.D0011 = ex.moment(orders(0, 1)).v;
  return e;
}

}  // namespace

QfiResult qfi_ideal(const Params& p) {
  p.validate();
  const auto e = extract(p);
  const double n1 = 1.0 / std::sqrt(e.W);
  const double n1sq = 1.0 / e.W;
  const double n1dot = -0.5 * e.Wdot / (e.W * std::sqrt(e.W));

  const cxd i(0.0, 1.0);
  const cxd dd = n1sq * e.D1111 - i * (n1 * n1dot) * e.D1100 +
                 i * (n1 * n1dot) * e.D0011 + (n1dot * n1dot) * e.W;
  const cxd dpsi_psi = -i * n1sq * e.D1100 + (n1 * n1dot) * e.W;

  QfiResult r;
  r.braket_check = std::abs(dpsi_psi.real());
  if (r.braket_check > kGaugeTol)
    throw ConsistencyError("qfi_ideal: Re<dpsi|psi> gauge residue too large");
  const double norm_dd = require_real(dd, kImagTol, "<dpsi|dpsi>");
  double F = 4.0 * (norm_dd - std::norm(dpsi_psi));
  if (F < -1e-10)
    throw ConsistencyError("qfi_ideal: negative Fisher information");
  r.F = std::max(F, 0.0);
  r.qcrb = r.F > 0.0 ? qcrb(r.F, p.v)
                     : std::numeric_limits<double>::infinity();
  return r;
}

double qcrb(double F, int v) {
  if (v < 1) throw UsageError("qcrb: v must be >= 1");
  if (!(F > 0.0)) throw DomainError("qcrb: Fisher information must be > 0");
  return 1.0 / std::sqrt(static_cast<double>(v) * F);
}

namespace detail {
cxd qfi_ideal_overlap_conjugate_route(const Params& p) {
  p.validate();
  const auto e = extract(p);
  const double n1 = 1.0 / std::sqrt(e.W);
  const double n1dot = -0.5 * e.Wdot / (e.W * std::sqrt(e.W));
  // <psi|dpsi> assembled from the right-insertion extraction
  return cxd(0.0, 1.0) * (1.0 / e.W) * e.D0011 + (n1 * n1dot) * e.W;
}
}  // namespace detail

}  // namespace opabs
