#include "opabs/common.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace opabs {

cxd phase_factor(double phi) {
  const double r = std::remainder(phi, 2.0 * kPi);
  return {std::cos(r), std::sin(r)};
}

double factorial(int n) {
  if (n < 0) throw UsageError("factorial: negative argument");
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double require_real(cxd z, double tol, const char* what) {
  const double bound = tol * std::max(1.0, std::abs(z.real()));
  if (std::abs(z.imag()) > bound)
    throw ConsistencyError(std::string(what) + ": imaginary residue " +
                           std::to_string(z.imag()) + " exceeds tolerance");
  return z.real();
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double xtol) {
  if (!(a < b)) throw UsageError("golden_section_minimize: empty interval");
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace opabs
