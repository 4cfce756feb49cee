#include "opabs/detection.hpp"

#include <cmath>
#include <limits>

#include "opabs/exponents.hpp"
#include "opabs/phase_jet.hpp"
#include "opabs/series.hpp"

namespace opabs {

namespace {

constexpr double kImagTol = 1e-8;         // residue guard on real quantities
constexpr double kAnnihilationTol = 1e-12;

MultiIndex g_orders(int k, int l) {
  // G_{k,l}: k derivatives in t, l in s
  return make_orders({{zvar::t, k}, {zvar::s, l}});
}

bool& x4_flip_storage() {
  static bool flip = false;
  return flip;
}

}  // namespace

namespace detail {
bool& detection_x4_sign_flip() { return x4_flip_storage(); }
}  // namespace detail

cxd subtracted_moment(const Params& p, int k, int l) {
  p.validate();
  if (k < 0 || l < 0) throw UsageError("subtracted_moment: negative order");
  const auto z = build_z0<cxd>(p, LossSymbol::detection_T, p.m + l, p.m + k);
  MomentExtractor<cxd> ex(z);
  const cxd gmm = ex.moment(g_orders(p.m, p.m));
  const double norm = require_real(gmm, kImagTol, "G_mm");
  if (norm < kAnnihilationTol) throw AnnihilatedStateError();
  return ex.moment(g_orders(p.m + k, p.m + l)) / norm;
}

HomodyneResult homodyne_stats(const Params& p) {
  p.validate();
  const int m = p.m;
  const auto z = build_z0<PhaseJet>(p, LossSymbol::detection_T, m + 2, m + 2);
  MomentExtractor<PhaseJet> ex(z);

  const PhaseJet gmm = ex.moment(g_orders(m, m));
  const double norm = require_real(gmm.v, kImagTol, "G_mm");
  if (norm < kAnnihilationTol) throw AnnihilatedStateError();

  const PhaseJet mean_num = ex.moment(g_orders(m, m + 1)) +
                            ex.moment(g_orders(m + 1, m));
  const PhaseJet mean = mean_num / gmm * (1.0 / std::sqrt(2.0));
  const PhaseJet sq_num = ex.moment(g_orders(m, m + 2)) +
                          ex.moment(g_orders(m + 2, m)) +
                          ex.moment(g_orders(m + 1, m + 1)) * 2.0;
  const PhaseJet sq = (sq_num / gmm + PhaseJet(cxd(1.0, 0.0))) * 0.5;

  HomodyneResult r;
  r.norm_Gmm = norm;
  r.mean_X = require_real(mean.v, kImagTol, "<X>");
  r.dmean_dphi = require_real(mean.d, kImagTol, "d<X>/dphi");
  const double x2 = require_real(sq.v, kImagTol, "<X^2>");
  double var = x2 - r.mean_X * r.mean_X;
  if (var < -1e-10 * std::max(1.0, std::abs(x2)))
    throw ConsistencyError("homodyne variance is negative");
  r.var_X = std::max(var, 0.0);
  r.delta_phi = r.dmean_dphi == 0.0
                    ? std::numeric_limits<double>::infinity()
                    : std::sqrt(r.var_X) / std::abs(r.dmean_dphi);
  return r;
}

double phase_sensitivity(const Params& p) { return homodyne_stats(p).delta_phi; }

}  // namespace opabs
