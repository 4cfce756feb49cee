#ifndef OPABS_PHOTON_NUMBER_HPP
#define OPABS_PHOTON_NUMBER_HPP

#include "opabs/params.hpp"

namespace opabs {

// Mean photon number inside the equivalent model (modes a + b after the
// non-local subtraction) and the benchmark limits derived from it.
struct PhotonNumberResult {
  double n_total = 0.0;
  double sql = 0.0;  // 1/sqrt(n_total); +inf when n_total = 0
  double hl = 0.0;   // 1/n_total;       +inf when n_total = 0
};

PhotonNumberResult internal_photon_number(const Params& p);

}  // namespace opabs

#endif
