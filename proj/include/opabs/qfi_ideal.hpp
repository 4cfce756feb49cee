#ifndef OPABS_QFI_IDEAL_HPP
#define OPABS_QFI_IDEAL_HPP

#include "opabs/params.hpp"

namespace opabs {

struct QfiResult {
  double F = 0.0;             // quantum Fisher information
  double qcrb = 0.0;          // 1/sqrt(v F)
  double braket_check = 0.0;  // |Re <dpsi|psi>| residue (gauge check)
};

// Ideal-case QFI of the equivalent model (non-local subtraction after the
// phase shifter), F = 4[<dpsi|dpsi> - |<dpsi|psi>|^2].  Loss parameters T and
// eta are ignored here.
QfiResult qfi_ideal(const Params& p);

// Quantum Cramer-Rao bound for v repeated measurements.  F must be > 0.
double qcrb(double F, int v);

namespace detail {
// Conjugate-route overlap <psi|dpsi>; computed only as a consistency test
// against conj(<dpsi|psi>).
cxd qfi_ideal_overlap_conjugate_route(const Params& p);
}  // namespace detail

}  // namespace opabs

#endif
