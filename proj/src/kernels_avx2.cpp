// AVX2 + FMA variants of the Fock-oracle kernels.  This translation unit is
// compiled with -mavx2 -mfma on x86-64 only; availability is still checked at
// runtime before dispatch, so the binary stays safe on older CPUs.

#include "opabs/kernels.hpp"

#if defined(OPABS_WITH_AVX2) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace opabs::kern {

namespace {

// One __m256d holds two complex doubles as [re0, im0, re1, im1].
// Complex multiply-accumulate by the constant a uses the addsub trick:
//   re: ar*xr - ai*xi,  im: ar*xi + ai*xr.

inline __m256d cmul(__m256d x, __m256d ar, __m256d ai) {
  const __m256d sw = _mm256_permute_pd(x, 0x5);  // swap re/im in each pair
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, sw));
}

void axpy_avx2(cxd* y, cxd a, const cxd* x, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_rw_avx2(cxd* y, cxd a, const double* w, const cxd* x,
                  std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // broadcast [w0, w1] to [w0, w0, w1, w1]
    const __m128d wp = _mm_loadu_pd(w + i);
    const __m256d wv =
        _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
    const __m256d xv = _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i), wv);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * w[i] * x[i];
}

void scale_avx2(cxd* y, cxd a, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cmul(yv, ar, ai));
  }
  for (; i < n; ++i) y[i] *= a;
}

double norm2_avx2(const cxd* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

cxd dot_conj_avx2(const cxd* x, const cxd* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();  // xr*yr + xi*yi per lane pair
  __m256d acc_im = _mm256_setzero_pd();  // xr*yi - xi*yr via swapped product
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  double re = re4[0] + re4[1] + re4[2] + re4[3];
  double im = (im4[1] - im4[0]) + (im4[3] - im4[2]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

const Ops kAvx2Ops{axpy_avx2, axpy_rw_avx2, scale_avx2, norm2_avx2,
                   dot_conj_avx2, "avx2"};

}  // namespace

const Ops* simd_ops_or_null() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Ops : nullptr;
}

}  // namespace opabs::kern

#else

namespace opabs::kern {
const Ops* simd_ops_or_null() { return nullptr; }
}  // namespace opabs::kern

#endif
