#include "opabs/fock.hpp"

#include <algorithm>
#include <cmath>

#include "opabs/kernels.hpp"

namespace opabs {

namespace {

std::vector<double> sqrt_table(int cutoff) {
  std::vector<double> t(static_cast<std::size_t>(cutoff) + 2);
  for (std::size_t n = 0; n < t.size(); ++n)
    t[n] = std::sqrt(static_cast<double>(n));
  return t;
}

// One generator term c * (op_p on mode p) (op_q on mode q), where the op is
// an annihilator for shift +1 (reads from n+1 with weight sqrt(n+1)) and a
// creator for shift -1 (reads from n-1 with weight sqrt(n)).  Accumulates
// into out; out and in must be distinct.
void accumulate_pair_term(FockState& out, const FockState& in, int p, int dp,
                          int q, int dq, cxd c, const double* tab) {
  const auto& k = kern::ops();
  const int C = in.cutoff();
  const int D = C + 1;
  const long sp = in.stride(p);
  const long sq = in.stride(q);
  cxd* dst = out.data();
  const cxd* src = in.data();

  const int p_lo = dp > 0 ? 0 : 1;
  const int p_hi = dp > 0 ? C - 1 : C;

  if (sq == 1) {
    // q is the contiguous mode: inner loop is a weighted shifted axpy.
    // Remaining modes (p plus at most one spectator) are outer loops.
    const long outer_count = static_cast<long>(in.size()) / (sp * D);
    for (long o = 0; o < outer_count; ++o) {
      for (int np = p_lo; np <= p_hi; ++np) {
        const double wp = dp > 0 ? tab[np + 1] : tab[np];
        // inner blocks between p and q (spectator sitting below p, if any)
        for (long mid = 0; mid < sp / D; ++mid) {
          const long base_dst = o * sp * D + np * sp + mid * D;
          const long base_src = o * sp * D + (np + dp) * sp + mid * D;
          if (dq > 0)
            k.axpy_rw(dst + base_dst, c * wp, tab + 1, src + base_src + 1,
                      static_cast<std::size_t>(C));
          else
            k.axpy_rw(dst + base_dst + 1, c * wp, tab + 1, src + base_src,
                      static_cast<std::size_t>(C));
        }
      }
    }
  } else {
    // q strided; the contiguous mode is a spectator slab of length D.
    const int q_lo = dq > 0 ? 0 : 1;
    const int q_hi = dq > 0 ? C - 1 : C;
    for (int np = p_lo; np <= p_hi; ++np) {
      const double wp = dp > 0 ? tab[np + 1] : tab[np];
      for (int nq = q_lo; nq <= q_hi; ++nq) {
        const double wq = dq > 0 ? tab[nq + 1] : tab[nq];
        k.axpy(dst + np * sp + nq * sq, c * (wp * wq),
               src + (np + dp) * sp + (nq + dq) * sq,
               static_cast<std::size_t>(D));
      }
    }
  }
}

struct GeneratorTerm {
  int dp, dq;  // +1 annihilator, -1 creator on modes p and q
  cxd c;
};

}  // namespace

FockState::FockState(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (modes != 2 && modes != 3) throw UsageError("FockState: modes must be 2 or 3");
  if (cutoff < 1 || cutoff > 512) throw UsageError("FockState: bad cutoff");
  std::size_t n = 1;
  for (int m = 0; m < modes; ++m) n *= static_cast<std::size_t>(cutoff + 1);
  amps_.assign(n, cxd(0.0, 0.0));
}

long FockState::stride(int mode) const {
  if (mode < 0 || mode >= modes_) throw UsageError("FockState: bad mode");
  long s = 1;
  for (int m = modes_ - 1; m > mode; --m) s *= cutoff_ + 1;
  return s;
}

double FockState::squared_norm() const {
  return kern::ops().norm2(amps_.data(), amps_.size());
}

void FockState::normalize() {
  const double n2 = squared_norm();
  if (n2 < 1e-14) throw AnnihilatedStateError();
  kern::ops().scale(amps_.data(), cxd(1.0 / std::sqrt(n2), 0.0), amps_.size());
}

double FockState::tail_mass() const {
  const double total = squared_norm();
  if (total <= 0.0) return 0.0;
  double tail = 0.0;
  const int D = dim();
  for (int mode = 0; mode < modes_; ++mode) {
    const long s = stride(mode);
    const long block = s * D;
    for (std::size_t base = 0; base < amps_.size();
         base += static_cast<std::size_t>(block))
      for (long i = 0; i < s; ++i) {
        const cxd a = amps_[base + static_cast<std::size_t>(cutoff_ * s + i)];
        tail += std::norm(a);
      }
  }
  return tail / total;
}

FockState product_coherent(int modes, int cutoff, double alpha, double beta) {
  FockState psi(modes, cutoff);
  const int D = cutoff + 1;
  auto coherent_amps = [&](double a) {
    std::vector<double> c(static_cast<std::size_t>(D));
    c[0] = std::exp(-0.5 * a * a);
    for (int n = 1; n < D; ++n)
      c[static_cast<std::size_t>(n)] =
          c[static_cast<std::size_t>(n - 1)] * a / std::sqrt(n);
    return c;
  };
  const auto ca = coherent_amps(alpha);
  const auto cb = coherent_amps(beta);
  const long sa = psi.stride(0), sb = psi.stride(1);
  for (int na = 0; na < D; ++na)
    for (int nb = 0; nb < D; ++nb)
      psi.data()[na * sa + nb * sb] =
          cxd(ca[static_cast<std::size_t>(na)] * cb[static_cast<std::size_t>(nb)], 0.0);
  return psi;
}

namespace {

void apply_exp_pair(FockState& psi, int p, int q,
                    const std::vector<GeneratorTerm>& terms,
                    double norm_bound) {
  const auto& k = kern::ops();
  const auto tab = sqrt_table(psi.cutoff());
  int steps = 1;
  while (norm_bound / steps > 4.0 && steps < (1 << 20)) steps *= 2;
  const double inv_scale = 1.0 / steps;

  const std::size_t n = psi.size();
  FockState cur(psi.modes(), psi.cutoff());
  FockState nxt(psi.modes(), psi.cutoff());
  constexpr int kMaxOrder = 64;
  for (int step = 0; step < steps; ++step) {
    std::copy(psi.data(), psi.data() + n, cur.data());
    bool converged = false;
    for (int order = 1; order <= kMaxOrder; ++order) {
      std::fill(nxt.amps().begin(), nxt.amps().end(), cxd(0.0, 0.0));
      const double f = inv_scale / order;
      for (const auto& t : terms)
        accumulate_pair_term(nxt, cur, p, t.dp, q, t.dq, t.c * f, tab.data());
      k.axpy(psi.data(), cxd(1.0, 0.0), nxt.data(), n);
      const double term_n2 = k.norm2(nxt.data(), n);
      const double acc_n2 = k.norm2(psi.data(), n);
      if (term_n2 <= 1e-34 * acc_n2) {
        converged = true;
        break;
      }
      std::swap(cur, nxt);
    }
    if (!converged)
      throw ConsistencyError("fock: generator exponential did not converge");
  }
}

}  // namespace

void apply_two_mode_squeeze(FockState& psi, int ma, int mb, double g,
                            double theta) {
  if (g == 0.0) return;
  const cxd xi = g * phase_factor(theta);
  std::vector<GeneratorTerm> terms{{+1, +1, std::conj(xi)},
                                   {-1, -1, -xi}};
  apply_exp_pair(psi, ma, mb, terms, 2.0 * g * (psi.cutoff() + 1));
}

namespace {
void apply_bs_i_angle(FockState& psi, int ma, int mb, double angle) {
  if (angle == 0.0) return;
  const cxd ia(0.0, angle);
  std::vector<GeneratorTerm> terms{{-1, +1, ia}, {+1, -1, ia}};
  apply_exp_pair(psi, ma, mb, terms,
                 2.0 * std::abs(angle) * (psi.cutoff() + 1));
}
}  // namespace

void apply_beam_splitter_i(FockState& psi, int ma, int mb, double tau) {
  apply_bs_i_angle(psi, ma, mb, std::acos(std::sqrt(tau)));
}

void apply_beam_splitter_i_inverse(FockState& psi, int ma, int mb,
                                   double tau) {
  apply_bs_i_angle(psi, ma, mb, -std::acos(std::sqrt(tau)));
}

void apply_beam_splitter_real(FockState& psi, int ma, int mv, double T) {
  const double angle = std::acos(std::min(1.0, std::sqrt(T)));
  if (angle == 0.0) return;
  std::vector<GeneratorTerm> terms{{-1, +1, cxd(angle, 0.0)},
                                   {+1, -1, cxd(-angle, 0.0)}};
  apply_exp_pair(psi, ma, mv, terms,
                 2.0 * std::abs(angle) * (psi.cutoff() + 1));
}

void apply_phase(FockState& psi, int mode, double phi) {
  const auto& k = kern::ops();
  const long s = psi.stride(mode);
  const int D = psi.dim();
  const double r = std::remainder(phi, 2.0 * kPi);
  const long block = s * D;
  for (std::size_t base = 0; base < psi.size();
       base += static_cast<std::size_t>(block))
    for (int n = 1; n < D; ++n)
      k.scale(psi.data() + base + static_cast<std::size_t>(n * s),
              std::polar(1.0, r * n), static_cast<std::size_t>(s));
}

double apply_subtraction(FockState& psi, int mode, int m) {
  const double before = psi.squared_norm();
  const long s = psi.stride(mode);
  const int D = psi.dim();
  const long block = s * D;
  for (int rep = 0; rep < m; ++rep) {
    for (std::size_t base = 0; base < psi.size();
         base += static_cast<std::size_t>(block)) {
      for (int n = 0; n < D - 1; ++n) {
        const double w = std::sqrt(static_cast<double>(n + 1));
        cxd* dst = psi.data() + base + static_cast<std::size_t>(n * s);
        const cxd* src = psi.data() + base + static_cast<std::size_t>((n + 1) * s);
        for (long i = 0; i < s; ++i) dst[i] = w * src[i];
      }
      cxd* last = psi.data() + base + static_cast<std::size_t>((D - 1) * s);
      std::fill(last, last + s, cxd(0.0, 0.0));
    }
  }
  const double after = psi.squared_norm();
  return before > 0.0 ? after / before : 0.0;
}

void apply_annihilator_combo(FockState& psi, cxd ca, int ma, cxd cb, int mb,
                             int power) {
  const auto& k = kern::ops();
  const int D = psi.dim();
  FockState out(psi.modes(), psi.cutoff());
  auto shift_accumulate = [&](FockState& dst, const FockState& src, int mode,
                              cxd c) {
    const long s = src.stride(mode);
    const long block = s * D;
    for (std::size_t base = 0; base < src.size();
         base += static_cast<std::size_t>(block))
      for (int n = 0; n < D - 1; ++n)
        k.axpy(dst.data() + base + static_cast<std::size_t>(n * s),
               c * std::sqrt(static_cast<double>(n + 1)),
               src.data() + base + static_cast<std::size_t>((n + 1) * s),
               static_cast<std::size_t>(s));
  };
  for (int rep = 0; rep < power; ++rep) {
    std::fill(out.amps().begin(), out.amps().end(), cxd(0.0, 0.0));
    shift_accumulate(out, psi, ma, ca);
    shift_accumulate(out, psi, mb, cb);
    std::swap(psi, out);
  }
}

cxd expect_ladder(const FockState& psi, int mode, int k, int l) {
  // <a^dag^k a^l> = sum conj(c_{n+k}) c_{n+l} sqrt((n+k)!/n!) sqrt((n+l)!/n!)
  const long s = psi.stride(mode);
  const int D = psi.dim();
  const long block = s * D;
  cxd acc(0.0, 0.0);
  for (std::size_t base = 0; base < psi.size();
       base += static_cast<std::size_t>(block))
    for (int n = 0; n + std::max(k, l) < D; ++n) {
      double w = 1.0;
      for (int j = 1; j <= k; ++j) w *= std::sqrt(static_cast<double>(n + j));
      for (int j = 1; j <= l; ++j) w *= std::sqrt(static_cast<double>(n + j));
      const cxd* up = psi.data() + base + static_cast<std::size_t>((n + k) * s);
      const cxd* lo = psi.data() + base + static_cast<std::size_t>((n + l) * s);
      cxd dot = kern::ops().dot_conj(up, lo, static_cast<std::size_t>(s));
      acc += w * dot;
    }
  return acc;
}

double expect_number(const FockState& psi, int mode) {
  const long s = psi.stride(mode);
  const int D = psi.dim();
  const long block = s * D;
  double acc = 0.0;
  for (std::size_t base = 0; base < psi.size();
       base += static_cast<std::size_t>(block))
    for (int n = 1; n < D; ++n)
      acc += n * kern::ops().norm2(
                     psi.data() + base + static_cast<std::size_t>(n * s),
                     static_cast<std::size_t>(s));
  return acc;
}

double expect_number_sq(const FockState& psi, int mode) {
  const long s = psi.stride(mode);
  const int D = psi.dim();
  const long block = s * D;
  double acc = 0.0;
  for (std::size_t base = 0; base < psi.size();
       base += static_cast<std::size_t>(block))
    for (int n = 1; n < D; ++n)
      acc += static_cast<double>(n) * n *
             kern::ops().norm2(
                 psi.data() + base + static_cast<std::size_t>(n * s),
                 static_cast<std::size_t>(s));
  return acc;
}

cxd inner(const FockState& x, const FockState& y) {
  if (x.size() != y.size()) throw UsageError("inner: shape mismatch");
  return kern::ops().dot_conj(x.data(), y.data(), x.size());
}

cxd inner_number(const FockState& x, const FockState& y, int mode) {
  if (x.size() != y.size()) throw UsageError("inner_number: shape mismatch");
  const long s = x.stride(mode);
  const int D = x.dim();
  const long block = s * D;
  cxd acc(0.0, 0.0);
  for (std::size_t base = 0; base < x.size();
       base += static_cast<std::size_t>(block))
    for (int n = 1; n < D; ++n)
      acc += static_cast<double>(n) *
             kern::ops().dot_conj(
                 x.data() + base + static_cast<std::size_t>(n * s),
                 y.data() + base + static_cast<std::size_t>(n * s),
                 static_cast<std::size_t>(s));
  return acc;
}

}  // namespace opabs
