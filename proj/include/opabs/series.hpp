#ifndef OPABS_SERIES_HPP
#define OPABS_SERIES_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "opabs/common.hpp"
#include "opabs/phase_jet.hpp"

namespace opabs {

// Sparse multivariate power series truncated by per-variable degree caps.
// This is the computational core behind every moment extraction: physical
// expectation values are factorial-scaled Taylor coefficients of exp(Z) at
// the origin for a quadratic exponent Z.
//
// Monomial counts stay tiny (<= 8 variables, per-variable degree <= m+2), so
// the representation favours determinism and clarity over asymptotics: terms
// live in an ordered map keyed by the exponent vector, giving reproducible
// iteration order and hence reproducible floating-point sums.

inline constexpr int kMaxVariables = 8;

// Identifier of one formal variable within a series (dense indices 0..n-1).
struct VariableId {
  int index = 0;
};

class MultiIndex {
 public:
  MultiIndex() = default;

  int operator[](int var) const { return deg_[static_cast<std::size_t>(var)]; }
  void set(int var, int degree) {
    if (var < 0 || var >= kMaxVariables || degree < 0 || degree > 255)
      throw UsageError("MultiIndex: variable or degree out of range");
    deg_[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(degree);
  }
  int total_degree() const {
    int t = 0;
    for (auto d : deg_) t += d;
    return t;
  }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < kMaxVariables; ++i)
      a.deg_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
          a.deg_[static_cast<std::size_t>(i)] + b.deg_[static_cast<std::size_t>(i)]);
    return a;
  }
  // componentwise a - b; valid only when b <= a componentwise
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < kMaxVariables; ++i)
      a.deg_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
          a.deg_[static_cast<std::size_t>(i)] - b.deg_[static_cast<std::size_t>(i)]);
    return a;
  }
  friend bool covers(const MultiIndex& a, const MultiIndex& b) {
    for (int i = 0; i < kMaxVariables; ++i)
      if (a.deg_[static_cast<std::size_t>(i)] < b.deg_[static_cast<std::size_t>(i)])
        return false;
    return true;
  }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return a.deg_ < b.deg_;  // lexicographic; fixes the term ordering
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.deg_ == b.deg_;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> deg_{};
};

// Convenience builder: make_orders({{var, degree}, ...}).
inline MultiIndex make_orders(
    std::initializer_list<std::pair<int, int>> entries) {
  MultiIndex idx;
  for (const auto& [var, deg] : entries) idx.set(var, deg);
  return idx;
}

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<cxd> {
  static cxd zero() { return {0.0, 0.0}; }
  static cxd one() { return {1.0, 0.0}; }
  static bool is_zero(const cxd& z) { return z == cxd(0.0, 0.0); }
  static cxd conjugate(const cxd& z) { return std::conj(z); }
  static cxd embed(cxd c) { return c; }
  // e^{i*phi}; the jet specialization also carries d/dphi
  static cxd phase(double phi) { return phase_factor(phi); }
};

template <>
struct ScalarTraits<PhaseJet> {
  static PhaseJet zero() { return {}; }
  static PhaseJet one() { return PhaseJet(cxd(1.0, 0.0)); }
  static bool is_zero(const PhaseJet& z) {
    return z.v == cxd(0.0, 0.0) && z.d == cxd(0.0, 0.0);
  }
  static PhaseJet conjugate(const PhaseJet& z) { return conj(z); }
  static PhaseJet embed(cxd c) { return PhaseJet(c); }
  static PhaseJet phase(double phi) {
    const cxd e = phase_factor(phi);
    return {e, cxd(0.0, 1.0) * e};
  }
};

template <class Scalar>
class TruncatedSeries {
 public:
  using Traits = ScalarTraits<Scalar>;

  explicit TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    if (caps_.empty() || caps_.size() > kMaxVariables)
      throw UsageError("TruncatedSeries: need 1..8 variables");
    for (int c : caps_)
      if (c < 0) throw UsageError("TruncatedSeries: negative cap");
  }

  int variable_count() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  bool empty() const { return terms_.empty(); }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }

  bool within_caps(const MultiIndex& idx) const {
    for (int v = 0; v < variable_count(); ++v)
      if (idx[v] > caps_[static_cast<std::size_t>(v)]) return false;
    for (int v = variable_count(); v < kMaxVariables; ++v)
      if (idx[v] != 0) return false;
    return true;
  }

  // Accumulates c onto the monomial; silently drops exact zeros and
  // monomials beyond the caps (truncation semantics).
  void add_term(const MultiIndex& idx, const Scalar& c) {
    if (Traits::is_zero(c) || !within_caps(idx)) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_registry(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }

  TruncatedSeries scaled(const Scalar& s) const {
    TruncatedSeries r(caps_);
    for (const auto& [idx, c] : terms_) r.add_term(idx, c * s);
    return r;
  }
  TruncatedSeries scaled(double s) const {
    TruncatedSeries r(caps_);
    for (const auto& [idx, c] : terms_) r.add_term(idx, c * s);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_same_registry(b);
    TruncatedSeries r(a.caps_);
    for (const auto& [ia, ca] : a.terms_)
      for (const auto& [ib, cb] : b.terms_) r.add_term(ia + ib, ca * cb);
    return r;
  }

  void require_same_registry(const TruncatedSeries& o) const {
    if (caps_ != o.caps_)
      throw UsageError("series: mismatched variable registries");
  }

 private:
  std::vector<int> caps_;
  std::map<MultiIndex, Scalar> terms_;
};

// exp(Z) truncated to Z's caps.  Z must have zero constant term (callers
// factor constants out); the expansion stops at n = sum of caps or as soon
// as Z^n truncates to the zero series.
template <class Scalar>
TruncatedSeries<Scalar> series_exp(const TruncatedSeries<Scalar>& z) {
  if (!ScalarTraits<Scalar>::is_zero(z.coefficient(MultiIndex{})))
    throw UsageError("series_exp: exponent has a nonzero constant term");
  TruncatedSeries<Scalar> result(z.caps());
  result.add_term(MultiIndex{}, ScalarTraits<Scalar>::one());
  TruncatedSeries<Scalar> power = result;  // Z^n / n!
  int max_order = 0;
  for (int c : z.caps()) max_order += c;
  for (int n = 1; n <= max_order; ++n) {
    power = (power * z).scaled(1.0 / n);
    if (power.empty()) break;
    result += power;
  }
  return result;
}

namespace detail {
inline void check_orders(const std::vector<int>& caps, const MultiIndex& orders) {
  for (int v = 0; v < static_cast<int>(caps.size()); ++v)
    if (orders[v] > caps[static_cast<std::size_t>(v)])
      throw UsageError("extraction orders exceed series caps");
  for (int v = static_cast<int>(caps.size()); v < kMaxVariables; ++v)
    if (orders[v] != 0)
      throw UsageError("extraction orders exceed series caps");
}
inline double factorial_weight(const MultiIndex& orders) {
  double w = 1.0;
  for (int v = 0; v < kMaxVariables; ++v) w *= factorial(orders[v]);
  return w;
}
}  // namespace detail

// (prod_i k_i!) * [coefficient of prod v_i^{k_i} in exp(Z)]; equals the mixed
// partial derivative of exp(Z) at the origin.
template <class Scalar>
Scalar extract_derivative(const TruncatedSeries<Scalar>& z,
                          const MultiIndex& orders) {
  detail::check_orders(z.caps(), orders);
  return series_exp(z).coefficient(orders) * detail::factorial_weight(orders);
}

// Same, but for prefactor * exp(Z) with a polynomial prefactor.
template <class Scalar>
Scalar extract_from_prefactored(const TruncatedSeries<Scalar>& prefactor,
                                const TruncatedSeries<Scalar>& z,
                                const MultiIndex& orders) {
  prefactor.require_same_registry(z);
  detail::check_orders(z.caps(), orders);
  return (prefactor * series_exp(z)).coefficient(orders) *
         detail::factorial_weight(orders);
}

// Caches exp(Z) so that many extractions against one exponent share the
// expansion.  moment_prefactored takes a single monomial prefactor, which is
// all the physics layers need.
template <class Scalar>
class MomentExtractor {
 public:
  explicit MomentExtractor(const TruncatedSeries<Scalar>& z)
      : caps_(z.caps()), exp_(series_exp(z)) {}

  Scalar moment(const MultiIndex& orders) const {
    detail::check_orders(caps_, orders);
    return exp_.coefficient(orders) * detail::factorial_weight(orders);
  }

  Scalar moment_prefactored(const MultiIndex& monomial,
                            const MultiIndex& orders) const {
    detail::check_orders(caps_, orders);
    if (!covers(orders, monomial)) return ScalarTraits<Scalar>::zero();
    return exp_.coefficient(orders - monomial) *
           detail::factorial_weight(orders);
  }

 private:
  std::vector<int> caps_;
  TruncatedSeries<Scalar> exp_;
};

}  // namespace opabs

#endif
