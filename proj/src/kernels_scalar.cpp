#include <cstdlib>
#include <cstring>

#include "opabs/kernels.hpp"

namespace opabs::kern {

namespace {

void axpy_scalar(cxd* y, cxd a, const cxd* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_rw_scalar(cxd* y, cxd a, const double* w, const cxd* x,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * w[i] * x[i];
}

void scale_scalar(cxd* y, cxd a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

double norm2_scalar(const cxd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

cxd dot_conj_scalar(const cxd* x, const cxd* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

const Ops kScalarOps{axpy_scalar, axpy_rw_scalar, scale_scalar, norm2_scalar,
                     dot_conj_scalar, "scalar"};

const Ops* pick_ops() {
  const char* forced = std::getenv("OPABS_KERNELS");
  if (forced && std::strcmp(forced, "scalar") == 0) return &kScalarOps;
  const Ops* simd = simd_ops_or_null();
  if (forced && std::strcmp(forced, "avx2") == 0 && simd) return simd;
  if (forced) return &kScalarOps;
  return simd ? simd : &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
  static const Ops* chosen = pick_ops();
  return *chosen;
}

#if !defined(OPABS_WITH_AVX2)
const Ops* simd_ops_or_null() { return nullptr; }
#endif

}  // namespace opabs::kern
