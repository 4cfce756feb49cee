#include "opabs/photon_number.hpp"

#include <cmath>
#include <limits>

#include "opabs/exponents.hpp"
#include "opabs/series.hpp"

namespace opabs {

namespace {
constexpr double kImagTol = 1e-8;
constexpr double kAnnihilationTol = 1e-12;
}  // namespace

PhotonNumberResult internal_photon_number(const Params& p) {
  p.validate();
  const int m = p.m;
  const auto z = build_z3<cxd>(p);
  MomentExtractor<cxd> ex(z);
  auto orders = [&](int a_pair, int b_pair) {
    return make_orders({{zvar::t, m},
                        {zvar::s, m},
                        {zvar::u1, a_pair},
                        {zvar::u2, a_pair},
                        {zvar::u3, b_pair},
                        {zvar::u4, b_pair}});
  };
  const double norm = require_real(ex.moment(orders(0, 0)), kImagTol, "Q_m0000");
  if (norm < kAnnihilationTol) throw AnnihilatedStateError();
  const double na = require_real(ex.moment(orders(1, 0)), kImagTol, "Q a-pair");
  const double nb = require_real(ex.moment(orders(0, 1)), kImagTol, "Q b-pair");
  double n = (na + nb) / norm;
  if (n < -1e-10)
    throw ConsistencyError("internal photon number is negative");
  n = std::max(n, 0.0);

  PhotonNumberResult r;
  r.n_total = n;
  if (n > 0.0) {
    r.sql = 1.0 / std::sqrt(n);
    r.hl = 1.0 / n;
  } else {
    r.sql = std::numeric_limits<double>::infinity();
    r.hl = std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace opabs
