#ifndef OPABS_KERNELS_HPP
#define OPABS_KERNELS_HPP

#include <cstddef>

#include "opabs/common.hpp"

namespace opabs::kern {

// Inner-loop primitives of the Fock-space oracle.  Every state evolution is
// a long sequence of these over contiguous complex arrays, so they come in a
// scalar reference flavour and a SIMD flavour selected once at runtime from
// CPU capabilities.  The two are equivalence-tested against each other.
struct Ops {
  // y[i] += a * x[i]
  void (*axpy)(cxd* y, cxd a, const cxd* x, std::size_t n);
  // y[i] += a * w[i] * x[i], real weights (ladder-operator sqrt tables)
  void (*axpy_rw)(cxd* y, cxd a, const double* w, const cxd* x, std::size_t n);
  // y[i] *= a
  void (*scale)(cxd* y, cxd a, std::size_t n);
  // sum |x[i]|^2
  double (*norm2)(const cxd* x, std::size_t n);
  // sum conj(x[i]) * y[i]
  cxd (*dot_conj)(const cxd* x, const cxd* y, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

// Best implementation for this machine (scalar unless AVX2+FMA is present).
// The OPABS_KERNELS environment variable ("scalar" / "avx2") overrides.
const Ops& ops();

// Null when this build or CPU lacks the SIMD variant.
const Ops* simd_ops_or_null();

}  // namespace opabs::kern

#endif
