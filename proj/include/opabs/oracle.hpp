#ifndef OPABS_ORACLE_HPP
#define OPABS_ORACLE_HPP

#include "opabs/fock.hpp"
#include "opabs/params.hpp"

namespace opabs {

// Brute-force verification path: every quantity the analytic modules produce
// is recomputed here by direct truncated-Fock-space evolution, with phase
// derivatives taken by central finite differences (one Richardson level).
// Nothing in this file touches the generating-function machinery.

inline constexpr int kDefaultCutoff = 40;

struct OracleValue {
  double value = 0.0;
  double err_estimate = 0.0;
};

// Normalized output state a^m B_v U_phi B_T S_g |alpha, beta, 0>; two modes
// when T = 1, three otherwise.  Records the conditional subtraction weight
// and the cutoff tail mass; throws CutoffError when the tail exceeds 1e-8.
FockState evolve_output_state(const Params& p, int cutoff = kDefaultCutoff);

OracleValue oracle_phase_sensitivity(const Params& p,
                                     int cutoff = kDefaultCutoff);

double oracle_qfi_ideal(const Params& p, int cutoff = kDefaultCutoff);

struct OracleLossyResult {
  double F_L = 0.0;
  double lambda_star = 0.0;
};
OracleLossyResult oracle_qfi_lossy(const Params& p,
                                   int cutoff = kDefaultCutoff);

double oracle_internal_photon_number(const Params& p,
                                     int cutoff = kDefaultCutoff);

}  // namespace opabs

#endif
