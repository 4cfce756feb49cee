#ifndef OPABS_QFI_LOSSY_HPP
#define OPABS_QFI_LOSSY_HPP

#include "opabs/common.hpp"
#include "opabs/params.hpp"

namespace opabs {

// Photon-loss QFI via the extended-system (purified Kraus) construction:
// the loss channel's generators reduce to polynomials in the mode-a number
// operator with coefficients parameterized by lambda, and the bound is the
// lambda-minimized extended-system QFI C_Q(lambda).

// H1 = A n^2 + B n and H2 = C n.  A = C^2 holds identically.
struct KrausCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

KrausCoeffs kraus_coeffs(double eta, double lambda);

// The six lambda-independent expectation blocks of the pre-loss subtracted
// state, all normalized (N2^2 applied):
struct LossyBlocks {
  double n2 = 0.0;        // N2^2 = inverse of the subtraction normalizer
  cxd dOdag_dO{};         // <dO^dag/dphi dO/dphi>
  cxd Odag_dO{};          // <O^dag dO/dphi>
  cxd dOdag_na_O{};       // <dO^dag/dphi n_a O>
  double na = 0.0;        // <O^dag n_a O>
  double na2 = 0.0;       // <O^dag n_a^2 O>
  double w00_dot = 0.0;   // d/dphi of the unnormalized norm (phase-jet)
};

LossyBlocks lossy_building_blocks(const Params& p);

// Extended-system QFI at a fixed Kraus parameter.
double cq_of_lambda(const Params& p, double lambda);

struct QfiLossyDetail {
  double F_L = 0.0;
  double lambda_star = 0.0;     // analytic minimizer (quadratic vertex)
  double lambda_numeric = 0.0;  // golden-section minimizer
  double cq_numeric = 0.0;      // C_Q at the numeric minimizer
};

// Closed-form lambda-optimized bound; a numerical minimization of
// cq_of_lambda must agree to 1e-6 relative or a ConsistencyError is thrown.
double qfi_lossy(const Params& p);
QfiLossyDetail qfi_lossy_detail(const Params& p);

}  // namespace opabs

#endif
