#ifndef OPABS_DETECTION_HPP
#define OPABS_DETECTION_HPP

#include "opabs/params.hpp"

namespace opabs {

// Homodyne quadrature statistics of the photon-subtracted output state and
// the error-propagation phase sensitivity.
struct HomodyneResult {
  double mean_X = 0.0;       // <X>, X = (a + a^dag)/sqrt(2)
  double dmean_dphi = 0.0;   // analytic d<X>/dphi (phase-jet, not differenced)
  double var_X = 0.0;        // <X^2> - <X>^2
  double delta_phi = 0.0;    // sqrt(var)/|dmean|; +inf at stationary phase
  double norm_Gmm = 0.0;     // subtraction normalizer (inverse of N0^2)
};

// <a^dag^k a^l> of the normalized subtracted state.
// Throws AnnihilatedStateError when the subtraction normalizer vanishes.
cxd subtracted_moment(const Params& p, int k, int l);

HomodyneResult homodyne_stats(const Params& p);

// sqrt(var X)/|d<X>/dphi|, +inf sentinel when the mean is stationary.
double phase_sensitivity(const Params& p);

}  // namespace opabs

#endif
