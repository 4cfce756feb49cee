#include "opabs/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "opabs/kernels.hpp"

namespace opabs {

namespace {

constexpr double kFdStep = 1e-4;

double tail_tolerance() {
  static const double tol = [] {
    if (const char* s = std::getenv("OPABS_TAIL_TOL")) return std::atof(s);
    return 1e-8;
  }();
  return tol;
}

void check_tail(const FockState& psi) {
  const double tail = psi.tail_mass();
  if (tail > tail_tolerance())
    throw CutoffError("fock oracle: cutoff too small");
}

// Richardson-extrapolated central difference of a scalar function of phi.
struct FdDerivative {
  double value = 0.0;
  double err_estimate = 0.0;
};

template <class F>
FdDerivative central_derivative(F&& f, double phi, double h) {
  const double d1 = (f(phi + h) - f(phi - h)) / (2.0 * h);
  const double d2 = (f(phi + 0.5 * h) - f(phi - 0.5 * h)) / h;
  FdDerivative r;
  r.value = (4.0 * d2 - d1) / 3.0;
  r.err_estimate = std::abs(r.value - d2) + 5e-12 * (1.0 + std::abs(r.value));
  return r;
}

// shared kernels for state construction -------------------------------------

FockState squeezed_input(const Params& p, int modes, int cutoff) {
  FockState psi = product_coherent(modes, cutoff, p.alpha, p.beta);
  apply_two_mode_squeeze(psi, 0, 1, p.g, p.theta);
  return psi;
}

// |psi_phi> of the ideal equivalent model: B_v^dag a^m B_v U_phi S |in>,
// normalized.  Two modes.
FockState ideal_model_state(const Params& p, int cutoff, double phi) {
  FockState psi = squeezed_input(p, 2, cutoff);
  apply_phase(psi, 0, phi);
  apply_beam_splitter_i(psi, 0, 1, p.tau);
  check_tail(psi);
  apply_subtraction(psi, 0, p.m);
  apply_beam_splitter_i_inverse(psi, 0, 1, p.tau);
  psi.normalize();
  return psi;
}

// |Psi> of the lossy construction: K^m S |in> with
// K = e^{i phi} sqrt(tau eta) a + i sqrt(1 - tau) b, normalized.  Two modes.
FockState lossy_model_state(const Params& p, int cutoff, double phi) {
  FockState psi = squeezed_input(p, 2, cutoff);
  check_tail(psi);
  const cxd ka = phase_factor(phi) * std::sqrt(p.tau * p.eta);
  const cxd kb(0.0, std::sqrt(1.0 - p.tau));
  apply_annihilator_combo(psi, ka, 0, kb, 1, p.m);
  psi.normalize();
  return psi;
}

// vector derivative by Richardson-extrapolated central differences
template <class StateF>
FockState state_derivative(StateF&& make, double phi, double h) {
  FockState pp = make(phi + h);
  const FockState pm = make(phi - h);
  const FockState qp = make(phi + 0.5 * h);
  const FockState qm = make(phi - 0.5 * h);
  const auto& k = kern::ops();
  // d1 = (pp - pm)/(2h), d2 = (qp - qm)/h, result = (4 d2 - d1)/3   in place
  FockState d(pp.modes(), pp.cutoff());
  k.axpy(d.data(), cxd(4.0 / (3.0 * h), 0.0), qp.data(), d.size());
  k.axpy(d.data(), cxd(-4.0 / (3.0 * h), 0.0), qm.data(), d.size());
  k.axpy(d.data(), cxd(-1.0 / (6.0 * h), 0.0), pp.data(), d.size());
  k.axpy(d.data(), cxd(1.0 / (6.0 * h), 0.0), pm.data(), d.size());
  return d;
}

}  // namespace

FockState evolve_output_state(const Params& p, int cutoff) {
  p.validate();
  const int modes = p.T < 1.0 ? 3 : 2;
  FockState psi = squeezed_input(p, modes, cutoff);
  if (modes == 3) apply_beam_splitter_real(psi, 0, 2, p.T);
  apply_phase(psi, 0, p.phi);
  apply_beam_splitter_i(psi, 0, 1, p.tau);
  const double tail = psi.tail_mass();
  if (tail > tail_tolerance())
    throw CutoffError("fock oracle: cutoff too small");
  const double weight = apply_subtraction(psi, 0, p.m);
  psi.subtraction_weight = weight;
  psi.recorded_tail = tail;
  psi.normalize();
  return psi;
}

OracleValue oracle_phase_sensitivity(const Params& p, int cutoff) {
  p.validate();
  const int modes = p.T < 1.0 ? 3 : 2;
  FockState base = squeezed_input(p, modes, cutoff);
  if (modes == 3) apply_beam_splitter_real(base, 0, 2, p.T);

  auto subtracted_at = [&](double phi) {
    FockState psi = base;  // copy
    apply_phase(psi, 0, phi);
    apply_beam_splitter_i(psi, 0, 1, p.tau);
    check_tail(psi);
    apply_subtraction(psi, 0, p.m);
    psi.normalize();
    return psi;
  };
  auto mean_x = [&](double phi) {
    const FockState psi = subtracted_at(phi);
    return std::sqrt(2.0) * expect_ladder(psi, 0, 0, 1).real();
  };

  const FockState center = subtracted_at(p.phi);
  const double mean = std::sqrt(2.0) * expect_ladder(center, 0, 0, 1).real();
  const double var = expect_ladder(center, 0, 0, 2).real() +
                     expect_number(center, 0) + 0.5 - mean * mean;
  const FdDerivative d = central_derivative(mean_x, p.phi, kFdStep);

  OracleValue r;
  if (d.value == 0.0) {
    r.value = std::numeric_limits<double>::infinity();
    r.err_estimate = 0.0;
    return r;
  }
  r.value = std::sqrt(std::max(var, 0.0)) / std::abs(d.value);
  r.err_estimate = r.value * d.err_estimate / std::abs(d.value);
  return r;
}

double oracle_qfi_ideal(const Params& p, int cutoff) {
  p.validate();
  auto make = [&](double phi) { return ideal_model_state(p, cutoff, phi); };
  const FockState psi0 = make(p.phi);
  const FockState d = state_derivative(make, p.phi, kFdStep);
  const double dd = inner(d, d).real();
  const cxd dp = inner(d, psi0);
  const double F = 4.0 * (dd - std::norm(dp));
  if (F < -1e-8) throw ConsistencyError("oracle_qfi_ideal: negative F");
  return std::max(F, 0.0);
}

OracleLossyResult oracle_qfi_lossy(const Params& p, int cutoff) {
  p.validate();
  auto make = [&](double phi) { return lossy_model_state(p, cutoff, phi); };
  const FockState psi0 = make(p.phi);
  const FockState d = state_derivative(make, p.phi, kFdStep);

  const double b1 = inner(d, d).real();            // <dPsi|dPsi>
  const cxd b2 = inner(d, psi0);                   // <dPsi|Psi>
  const double nbar = expect_number(psi0, 0);      // <n_a>
  const double n2 = expect_number_sq(psi0, 0);     // <n_a^2>
  const cxd b5 = inner_number(d, psi0, 0);         // <dPsi|n_a|Psi>

  auto cq = [&](double lambda) {
    const double u = 1.0 + lambda;
    const double C = 1.0 - u * (1.0 - p.eta);
    const double A = C * C;
    const double B = u * u * p.eta * (1.0 - p.eta);
    const double h1 = A * n2 + B * nbar;
    const double h2 = C * nbar;
    return 4.0 * (b1 - std::norm(b2) + h1 - h2 * h2 - 2.0 * C * b5.imag() +
                  2.0 * h2 * b2.imag());
  };

  double lo = -2.0, hi = 1.0;
  OracleLossyResult r;
  for (int attempt = 0;; ++attempt) {
    const int kGrid = 61;
    double best = lo, best_val = cq(lo);
    for (int k = 1; k < kGrid; ++k) {
      const double lam = lo + (hi - lo) * k / (kGrid - 1);
      const double val = cq(lam);
      if (val < best_val) {
        best_val = val;
        best = lam;
      }
    }
    const double step = (hi - lo) / (kGrid - 1);
    const bool on_edge = best <= lo + 0.5 * step || best >= hi - 0.5 * step;
    if (!on_edge || p.eta == 1.0 || attempt >= 6) {
      r.lambda_star = golden_section_minimize(
          cq, std::max(lo, best - 2.0 * step), std::min(hi, best + 2.0 * step),
          1e-10);
      r.F_L = std::max(cq(r.lambda_star), 0.0);
      return r;
    }
    lo *= 2.0;
    hi *= 2.0;
  }
}

double oracle_internal_photon_number(const Params& p, int cutoff) {
  p.validate();
  const int modes = p.T < 1.0 ? 3 : 2;
  FockState psi = squeezed_input(p, modes, cutoff);
  if (modes == 3) apply_beam_splitter_real(psi, 0, 2, p.T);
  apply_phase(psi, 0, p.phi);
  check_tail(psi);
  apply_annihilator_combo(psi, cxd(std::sqrt(p.tau), 0.0), 0,
                          cxd(0.0, std::sqrt(1.0 - p.tau)), 1, p.m);
  psi.normalize();
  return expect_number(psi, 0) + expect_number(psi, 1);
}

}  // namespace opabs
