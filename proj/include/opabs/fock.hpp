#ifndef OPABS_FOCK_HPP
#define OPABS_FOCK_HPP

#include <vector>

#include "opabs/common.hpp"

namespace opabs {

// Dense complex amplitude tensor over 2 or 3 bosonic modes with a per-mode
// photon-number cutoff.  Layout is row-major with the last mode contiguous;
// all evolution operators run matrix-free through the kern:: primitives.
class FockState {
 public:
  FockState(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  int dim() const { return cutoff_ + 1; }
  std::size_t size() const { return amps_.size(); }
  long stride(int mode) const;

  cxd* data() { return amps_.data(); }
  const cxd* data() const { return amps_.data(); }
  std::vector<cxd>& amps() { return amps_; }
  const std::vector<cxd>& amps() const { return amps_; }

  double squared_norm() const;
  // scales to unit norm; throws AnnihilatedStateError below 1e-14
  void normalize();
  // fraction of squared norm sitting on any index == cutoff
  double tail_mass() const;

  // conditional-subtraction probability weight and the tail recorded by the
  // evolution that produced this state
  double subtraction_weight = 1.0;
  double recorded_tail = 0.0;

 private:
  int modes_;
  int cutoff_;
  std::vector<cxd> amps_;
};

// |alpha>_a |beta>_b (|0>_v) with truncated coherent amplitudes.
FockState product_coherent(int modes, int cutoff, double alpha, double beta);

// exp(xi* a b - xi a^dag b^dag), xi = g e^{i theta}, on modes (ma, mb).
void apply_two_mode_squeeze(FockState& psi, int ma, int mb, double g,
                            double theta);
// exp(i theta_B (a^dag b + a b^dag)) with cos(theta_B) = sqrt(tau):
// a -> sqrt(tau) a + i sqrt(1-tau) b.
void apply_beam_splitter_i(FockState& psi, int ma, int mb, double tau);
void apply_beam_splitter_i_inverse(FockState& psi, int ma, int mb, double tau);
// exp(theta (a^dag v - a v^dag)) with cos(theta) = sqrt(T):
// a -> sqrt(T) a + sqrt(1-T) v (real-orthogonal loss convention).
void apply_beam_splitter_real(FockState& psi, int ma, int mv, double T);
// diagonal e^{i phi n_mode}
void apply_phase(FockState& psi, int mode, double phi);

// a_mode^m followed by nothing; returns the squared-norm ratio (the
// conditional subtraction weight).  Does not normalize.
double apply_subtraction(FockState& psi, int mode, int m);

// (ca * a_ma + cb * a_mb)^power, matrix-free.
void apply_annihilator_combo(FockState& psi, cxd ca, int ma, cxd cb, int mb,
                             int power);

// unnormalized expectations on the given state
cxd expect_ladder(const FockState& psi, int mode, int k, int l);
double expect_number(const FockState& psi, int mode);
double expect_number_sq(const FockState& psi, int mode);
cxd inner(const FockState& x, const FockState& y);          // <x|y>
cxd inner_number(const FockState& x, const FockState& y, int mode);  // <x|n|y>

}  // namespace opabs

#endif
