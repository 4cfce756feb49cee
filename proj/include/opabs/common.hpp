#ifndef OPABS_COMMON_HPP
#define OPABS_COMMON_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace opabs {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Error taxonomy.  UsageError: the caller violated a contract (bad argument,
// mismatched variable registries).  DomainError: the request is physically
// undefined (e.g. photon subtraction annihilates the state).
// ConsistencyError: an internal cross-check failed; this must never fire on
// correct inputs and indicates a bug.  CutoffError: a truncated-Fock-space
// computation did not converge at the given cutoff.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct AnnihilatedStateError : DomainError {
  AnnihilatedStateError() : DomainError("subtraction annihilates state") {}
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e^{i*phi} with the angle reduced into (-pi, pi] first, so that arguments
// differing by exact multiples of 2*pi produce bit-identical results.
cxd phase_factor(double phi);

// n! as a double; n must be small (series orders stay far below overflow).
double factorial(int n);

// Asserts z is real up to |Im z| <= tol * max(1, |Re z|); returns Re z.
// Throws ConsistencyError otherwise (mathematically real quantities must not
// be silently truncated).
double require_real(cxd z, double tol, const char* what);

// Argmin of a unimodal f on [a, b] to absolute x-tolerance xtol.
double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double xtol);

// Runs body(i) for i in [0, n) across a small thread pool.  Used for sweep
// grids and oracle batches; bodies must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace opabs

#endif
