#ifndef OPABS_PARAMS_HPP
#define OPABS_PARAMS_HPP

#include "opabs/common.hpp"

namespace opabs {

// One physical configuration of the interferometer.
//
//   alpha, beta : coherent amplitudes injected into modes a and b (real >= 0;
//                 scheme A: alpha>0, beta=0; scheme B: alpha=0, beta>0)
//   g, theta    : parametric-amplifier gain and phase (squeezing xi = g e^{i theta})
//   phi         : unknown phase to be estimated
//   tau         : variable-beam-splitter transmittance
//   T           : detection-path loss transmittance (1 = lossless)
//   eta         : phase-shifter-path loss transmittance used by the lossy QFI
//   m           : photons subtracted at the output
//   v           : number of repeated measurements (enters the QCRB only)
struct Params {
  double alpha = 1.0;
  double beta = 0.0;
  double g = 1.0;
  double theta = kPi;
  double phi = kPi / 2.0;
  double tau = 0.5;
  double T = 1.0;
  double eta = 1.0;
  int m = 0;
  int v = 1;

  // Throws UsageError naming the offending field.
  void validate() const {
    auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!(alpha >= 0.0)) throw UsageError("params: alpha must be >= 0");
    if (!(beta >= 0.0)) throw UsageError("params: beta must be >= 0");
    if (!(g >= 0.0)) throw UsageError("params: g must be >= 0");
    if (!in01(tau)) throw UsageError("params: tau must lie in [0,1]");
    if (!in01(T)) throw UsageError("params: T must lie in [0,1]");
    if (!in01(eta)) throw UsageError("params: eta must lie in [0,1]");
    if (m < 0 || m > 24) throw UsageError("params: m must lie in [0,24]");
    if (v < 1) throw UsageError("params: v must be >= 1");
    if (!(theta == theta) || !(phi == phi))
      throw UsageError("params: theta/phi must be finite");
  }

  bool is_scheme_a() const { return alpha > 0.0 && beta == 0.0; }
  bool is_scheme_b() const { return alpha == 0.0 && beta > 0.0; }

  static Params scheme_a(double amplitude = 1.0) {
    Params p;
    p.alpha = amplitude;
    p.beta = 0.0;
    return p;
  }
  static Params scheme_b(double amplitude = 1.0) {
    Params p;
    p.alpha = 0.0;
    p.beta = amplitude;
    return p;
  }
};

}  // namespace opabs

#endif
