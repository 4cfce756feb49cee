#ifndef OPABS_PHASE_JET_HPP
#define OPABS_PHASE_JET_HPP

#include <cmath>

#include "opabs/common.hpp"

namespace opabs {

// First-order jet (value, d/dphi) over complex doubles.  Threading these
// through the generating-function machinery yields analytic phase
// derivatives without finite differences.
struct PhaseJet {
  cxd v{0.0, 0.0};  // value
  cxd d{0.0, 0.0};  // derivative with respect to the probe phase

  PhaseJet() = default;
  PhaseJet(cxd value, cxd deriv) : v(value), d(deriv) {}
  explicit PhaseJet(cxd value) : v(value), d(0.0, 0.0) {}
  explicit PhaseJet(double value) : v(value), d(0.0, 0.0) {}

  PhaseJet& operator+=(const PhaseJet& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  PhaseJet& operator-=(const PhaseJet& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  PhaseJet& operator*=(const PhaseJet& o) {
    d = d * o.v + v * o.d;
    v = v * o.v;
    return *this;
  }
  PhaseJet& operator*=(double s) {
    v *= s;
    d *= s;
    return *this;
  }

  friend PhaseJet operator+(PhaseJet a, const PhaseJet& b) { return a += b; }
  friend PhaseJet operator-(PhaseJet a, const PhaseJet& b) { return a -= b; }
  friend PhaseJet operator-(const PhaseJet& a) { return {-a.v, -a.d}; }
  friend PhaseJet operator*(PhaseJet a, const PhaseJet& b) { return a *= b; }
  friend PhaseJet operator*(PhaseJet a, double s) { return a *= s; }
  friend PhaseJet operator*(double s, PhaseJet a) { return a *= s; }
  friend PhaseJet operator*(const PhaseJet& a, cxd c) {
    return {a.v * c, a.d * c};
  }
  friend PhaseJet operator*(cxd c, const PhaseJet& a) { return a * c; }
  friend PhaseJet operator/(const PhaseJet& a, const PhaseJet& b) {
    const cxd q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
  }
  friend bool operator==(const PhaseJet& a, const PhaseJet& b) {
    return a.v == b.v && a.d == b.d;
  }

  friend PhaseJet conj(const PhaseJet& a) {
    return {std::conj(a.v), std::conj(a.d)};
  }
  friend PhaseJet exp(const PhaseJet& a) {
    const cxd e = std::exp(a.v);
    return {e, e * a.d};
  }
};

}  // namespace opabs

#endif
