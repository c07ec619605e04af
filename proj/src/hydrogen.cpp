// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/hydrogen.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>

namespace qedwall::hydrogen {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double factorial(int n) {
  assert(n >= 0 && n <= 60);
  static const auto table = [] {
    std::array<double, 61> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 60; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[n];
}

// factorial of a doubled-integer argument that must be a whole number
double fact2(int two_n) {
  assert(two_n >= 0 && two_n % 2 == 0);
  return factorial(two_n / 2);
}

}  // namespace

std::string to_string(LevelLabel l) {
  switch (l) {
    case LevelLabel::S12: return "2S1/2";
    case LevelLabel::P12: return "2P1/2";
    case LevelLabel::P32: return "2P3/2";
  }
  return "?";
}

LevelLabel level_from_string(const std::string& s) {
  if (s == "2S" || s == "2S12" || s == "2S1/2") return LevelLabel::S12;
  if (s == "2P12" || s == "2P1/2") return LevelLabel::P12;
  if (s == "2P32" || s == "2P3/2") return LevelLabel::P32;
  throw std::invalid_argument("unknown state label '" + s + "'");
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M) {
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
      std::abs(two_M) > two_J)
    return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;

  const double delta =
      fact2(two_j1 + two_j2 - two_J) * fact2(two_j1 - two_j2 + two_J) *
      fact2(-two_j1 + two_j2 + two_J) / fact2(two_j1 + two_j2 + two_J + 2);
  const double pref =
      std::sqrt((two_J + 1.0) * delta * fact2(two_j1 + two_m1) *
                fact2(two_j1 - two_m1) * fact2(two_j2 + two_m2) *
                fact2(two_j2 - two_m2) * fact2(two_J + two_M) *
                fact2(two_J - two_M));

  // summation over k (integer); bounds from non-negative factorials
  const int t1 = two_j1 + two_j2 - two_J;      // 2(j1+j2-J)
  const int t2 = two_j1 - two_m1;              // 2(j1-m1)
  const int t3 = two_j2 + two_m2;              // 2(j2+m2)
  const int t4 = two_J - two_j2 + two_m1;      // 2(J-j2+m1)
  const int t5 = two_J - two_j1 - two_m2;      // 2(J-j1-m2)
  const int kmin = std::max({0, -t4, -t5});
  const int kmax = std::min({t1, t2, t3});
  double sum = 0.0;
  for (int tk = kmin; tk <= kmax; tk += 2) {
    const double denom = fact2(tk) * fact2(t1 - tk) * fact2(t2 - tk) *
                         fact2(t3 - tk) * fact2(t4 + tk) * fact2(t5 + tk);
    sum += (((tk / 2) % 2) ? -1.0 : 1.0) / denom;
  }
  return pref * sum;
}

double gaunt(int l1, int m1, int L, int M, int l2, int m2) {
  if (m1 != M + m2) return 0.0;
  const double pref =
      std::sqrt((2.0 * L + 1) * (2.0 * l2 + 1) / (4.0 * kPi * (2.0 * l1 + 1)));
  return pref * clebsch_gordan(2 * L, 0, 2 * l2, 0, 2 * l1, 0) *
         clebsch_gordan(2 * L, 2 * M, 2 * l2, 2 * m2, 2 * l1, 2 * m1);
}

// ---------------------------------------------------------------------------
// Radial functions

double radial_wavefunction(int n, int l, double r) {
  if (n < 1 || l < 0 || l >= n)
    throw std::domain_error("radial_wavefunction: invalid quantum numbers");
  if (r < 0.0 || !std::isfinite(r))
    throw std::domain_error("radial_wavefunction: r must be >= 0");
  const double x = 2.0 * r / n;
  const int nr = n - l - 1;
  const int a = 2 * l + 1;
  // associated Laguerre L^a_nr(x) by upward recurrence
  double lkm1 = 1.0;            // L^a_0
  double lk = 1.0 + a - x;      // L^a_1
  double lag = (nr == 0) ? lkm1 : lk;
  for (int k = 2; k <= nr; ++k) {
    const double lkp = ((2.0 * k - 1.0 + a - x) * lk - (k - 1.0 + a) * lkm1) / k;
    lkm1 = lk;
    lk = lkp;
    lag = lkp;
  }
  const double norm = std::sqrt(std::pow(2.0 / n, 3) * factorial(n - l - 1) /
                                (2.0 * n * factorial(n + l)));
  return norm * std::pow(x, l) * std::exp(-x / 2.0) * lag;
}

namespace {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0)
    throw std::runtime_error(
        "adaptive quadrature failed to converge (depth limit)");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth = 48) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace

double radial_integral(int n1, int l1, int n2, int l2, int k) {
  if (n1 < 1 || l1 < 0 || l1 >= n1 || n2 < 1 || l2 < 0 || l2 >= n2 || k < 0)
    throw std::domain_error("radial_integral: invalid arguments");
  const double rmax = 40.0 * std::max(n1, n2);
  const auto f = [=](double r) {
    return radial_wavefunction(n1, l1, r) * radial_wavefunction(n2, l2, r) *
           std::pow(r, k + 2);
  };
  double scale = 0.0;
  for (int i = 1; i <= 256; ++i)
    scale = std::max(scale, std::abs(f(rmax * i / 257.0)) * rmax);
  if (scale == 0.0) scale = 1.0;
  // geometric seed panels so a localized integrand cannot hide between the
  // probe points of a single wide interval
  double sum = 0.0;
  double a = 0.0, b = 1.0;
  while (a < rmax) {
    b = std::min(b, rmax);
    sum += adaptive_simpson(f, a, b, 1e-13 * scale * (b - a) / rmax + 1e-15 * scale);
    a = b;
    b *= 2.0;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Spinors and operators

Spinor make_spinor(int n, int l, int two_j, int two_mu) {
  if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
    throw std::domain_error("make_spinor: j must be l +/- 1/2");
  if (std::abs(two_mu) > two_j || (two_mu % 2) == 0)
    throw std::domain_error("make_spinor: invalid mu");
  Spinor s{n, l, two_j, two_mu, {}};
  for (int two_ms : {+1, -1}) {
    const int two_ml = two_mu - two_ms;
    if (two_ml % 2 != 0 || std::abs(two_ml) > 2 * l) continue;
    const double c =
        clebsch_gordan(2 * l, two_ml, 1, two_ms, two_j, two_mu);
    if (c != 0.0) s.components.push_back({two_ml / 2, two_ms, c});
  }
  return s;
}

Spinor make_spinor(int n, LevelLabel fs, int two_mu) {
  switch (fs) {
    case LevelLabel::S12: return make_spinor(n, 0, 1, two_mu);
    case LevelLabel::P12: return make_spinor(n, 1, 1, two_mu);
    case LevelLabel::P32: return make_spinor(n, 1, 3, two_mu);
  }
  throw std::logic_error("make_spinor: bad label");
}

namespace ops {

TensorOperator z() {
  return {1, {{1, 0, std::sqrt(4.0 * kPi / 3.0)}}};
}
TensorOperator x() {
  const double c = std::sqrt(2.0 * kPi / 3.0);
  return {1, {{1, -1, c}, {1, +1, -c}}};
}
TensorOperator y() {
  const std::complex<double> ic(0.0, std::sqrt(2.0 * kPi / 3.0));
  return {1, {{1, -1, ic}, {1, +1, ic}}};
}
TensorOperator r2() {
  return {2, {{0, 0, std::sqrt(4.0 * kPi)}}};
}
TensorOperator z2() {
  return {2,
          {{0, 0, std::sqrt(4.0 * kPi) / 3.0},
           {2, 0, (4.0 / 3.0) * std::sqrt(kPi / 5.0)}}};
}
TensorOperator rpar2() {
  return {2,
          {{0, 0, 2.0 * std::sqrt(4.0 * kPi) / 3.0},
           {2, 0, -(4.0 / 3.0) * std::sqrt(kPi / 5.0)}}};
}
TensorOperator quad() {
  return {2, {{2, 0, -4.0 * std::sqrt(kPi / 5.0)}}};
}
TensorOperator xz() {
  const double c = std::sqrt(2.0 * kPi / 15.0);
  return {2, {{2, -1, c}, {2, +1, -c}}};
}
TensorOperator yz() {
  const std::complex<double> ic(0.0, std::sqrt(2.0 * kPi / 15.0));
  return {2, {{2, -1, ic}, {2, +1, ic}}};
}
TensorOperator z_w() {
  // z (rpar^2 + 2 z^2) = r^3 (cos + cos^3)
  return costheta_poly(3, {0.0, 1.0, 0.0, 1.0});
}

TensorOperator costheta_poly(int radial_power, const std::vector<double>& coeffs) {
  // expand sum_p c_p cos^p in Legendre polynomials using
  // cos * P_k = ((k+1) P_{k+1} + k P_{k-1}) / (2k+1)
  const int pmax = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> leg(pmax + 2, 0.0);  // result, Legendre basis
  std::vector<double> cur(pmax + 2, 0.0);  // cos^p in Legendre basis
  cur[0] = 1.0;
  if (pmax >= 0 && coeffs[0] != 0.0) leg[0] += coeffs[0];
  for (int p = 1; p <= pmax; ++p) {
    std::vector<double> next(pmax + 2, 0.0);
    for (int k = 0; k <= pmax + 1; ++k) {
      if (cur[k] == 0.0) continue;
      next[k + 1] += cur[k] * (k + 1.0) / (2.0 * k + 1.0);
      if (k > 0) next[k - 1] += cur[k] * k / (2.0 * k + 1.0);
    }
    cur = next;
    if (coeffs[p] != 0.0)
      for (int k = 0; k <= pmax + 1; ++k) leg[k] += coeffs[p] * cur[k];
  }
  TensorOperator op{radial_power, {}};
  for (int k = 0; k <= pmax + 1; ++k) {
    if (leg[k] == 0.0) continue;
    op.terms.push_back({k, 0, leg[k] * std::sqrt(4.0 * kPi / (2.0 * k + 1.0))});
  }
  return op;
}

}  // namespace ops

std::complex<double> matrix_element(const Spinor& bra, const TensorOperator& op,
                                    const Spinor& ket) {
  // angular sum first; radial integral only when needed
  std::complex<double> ang(0.0, 0.0);
  for (const auto& cb : bra.components) {
    for (const auto& ck : ket.components) {
      if (cb.two_ms != ck.two_ms) continue;
      for (const auto& t : op.terms) {
        if (cb.m_l != t.M + ck.m_l) continue;
        const double g = gaunt(bra.l, cb.m_l, t.L, t.M, ket.l, ck.m_l);
        if (g != 0.0) ang += cb.coeff * ck.coeff * t.c * g;
      }
    }
  }
  if (ang == std::complex<double>(0.0, 0.0)) return ang;
  return ang * radial_integral(bra.n, bra.l, ket.n, ket.l, op.radial_power);
}

// ---------------------------------------------------------------------------
// Level energies and channels

namespace {

double fs_offset(int l, int two_j, const Config& cfg) {
  // within the n=2 manifold, measured from 2P_1/2
  const auto& c = cfg.constants;
  if (l == 0) return c.lamb_shift;
  if (l == 1 && two_j == 1) return 0.0;
  if (l == 1 && two_j == 3)
    return cfg.gap_convention == GapConvention::kLambPlusFine
               ? c.lamb_shift + c.fine_structure
               : c.fine_structure;
  return 0.0;  // no fine structure kept for l >= 2
}

struct LevelId {
  int n, l, two_j;
};

LevelId ref_level(const RefState& ref) {
  switch (ref.fs) {
    case LevelLabel::S12: return {ref.n, 0, 1};
    case LevelLabel::P12: return {ref.n, 1, 1};
    case LevelLabel::P32: return {ref.n, 1, 3};
  }
  throw std::logic_error("ref_level: bad label");
}

std::string level_name(int n, int l, int two_j) {
  static const char* lc = "SPDFG";
  return std::to_string(n) + lc[l] + std::to_string(two_j) + "/2";
}

}  // namespace

double level_energy(int n, int l, int two_j, const Config& cfg) {
  if (n == 2) return -0.125 + fs_offset(l, two_j, cfg);
  return -0.5 / (n * n);
}

double energy_gap(int n_q, int l_q, int two_j_q, const RefState& ref,
                  const Config& cfg) {
  const LevelId r = ref_level(ref);
  if (n_q == r.n && n_q == 2)  // exact difference of ladder offsets
    return fs_offset(l_q, two_j_q, cfg) - fs_offset(r.l, r.two_j, cfg);
  return level_energy(n_q, l_q, two_j_q, cfg) -
         level_energy(r.n, r.l, r.two_j, cfg);
}

std::vector<VirtualChannel> dipole_channels(const RefState& ref, int n_max,
                                            const Config& cfg) {
  if (n_max < 2) throw std::domain_error("dipole_channels: n_max must be >= 2");
  const LevelId r = ref_level(ref);
  const Spinor bra = make_spinor(r.n, r.l, r.two_j, 1);
  const auto op_x = ops::x();
  const auto op_y = ops::y();
  const auto op_z = ops::z();

  // virtual set starts at the n = 2 shell: the ground state is either
  // parity-forbidden (S references) or outside the basis contract
  std::vector<VirtualChannel> out;
  for (int nq = 2; nq <= n_max; ++nq) {
    for (int lq : {r.l - 1, r.l + 1}) {
      if (lq < 0 || lq >= nq) continue;
      for (int two_jq = std::abs(2 * lq - 1); two_jq <= 2 * lq + 1;
           two_jq += 2) {
        double dpar = 0.0, dz = 0.0;
        for (int two_mu = -two_jq; two_mu <= two_jq; two_mu += 2) {
          const Spinor q = make_spinor(nq, lq, two_jq, two_mu);
          dpar += std::norm(matrix_element(bra, op_x, q)) +
                  std::norm(matrix_element(bra, op_y, q));
          dz += std::norm(matrix_element(bra, op_z, q));
        }
        if (dpar + dz < 1e-20) continue;
        const double gap = energy_gap(nq, lq, two_jq, ref, cfg);
        if (std::abs(gap) < 1e-12)
          throw std::runtime_error("dipole_channels: degenerate channel " +
                                   level_name(nq, lq, two_jq));
        out.push_back({gap, dpar, dz, level_name(nq, lq, two_jq)});
      }
    }
  }
  return out;
}

std::vector<MixingChannel> mixing_channels(LevelLabel m, LevelLabel n,
                                           int n_max, const Config& cfg) {
  if (n_max < 2) throw std::domain_error("mixing_channels: n_max must be >= 2");
  const bool m_odd = (m != LevelLabel::S12);
  const bool n_odd = (n != LevelLabel::S12);
  if (m_odd == n_odd)
    throw std::domain_error("mixing_channels: states must have opposite parity");

  const Spinor bm = make_spinor(2, m, 1);
  const Spinor bn = make_spinor(2, n, 1);
  const RefState ref{2, n};

  const auto op_x = ops::x();
  const auto op_y = ops::y();
  const auto op_z = ops::z();
  const auto op_xz = ops::xz();
  const auto op_yz = ops::yz();
  const auto op_q = ops::quad();

  std::vector<MixingChannel> out;
  for (int nq = 2; nq <= n_max; ++nq) {
    for (int lq = 0; lq <= std::min(2, nq - 1); ++lq) {
      for (int two_jq = std::abs(2 * lq - 1); two_jq <= 2 * lq + 1;
           two_jq += 2) {
        double pz = 0.0, pr = 0.0, pz_rev = 0.0, pr_rev = 0.0;
        for (int two_mu = -two_jq; two_mu <= two_jq; two_mu += 2) {
          const Spinor q = make_spinor(nq, lq, two_jq, two_mu);
          const auto mz = matrix_element(bm, op_z, q);
          if (mz != 0.0) pz += (mz * matrix_element(q, op_q, bn)).real();
          const auto mq = matrix_element(bm, op_q, q);
          if (mq != 0.0) pz_rev += (mq * matrix_element(q, op_z, bn)).real();
          const auto mx = matrix_element(bm, op_x, q);
          const auto my = matrix_element(bm, op_y, q);
          if (mx != 0.0 || my != 0.0)
            pr += (mx * matrix_element(q, op_xz, bn) +
                   my * matrix_element(q, op_yz, bn))
                      .real();
          const auto mxz = matrix_element(bm, op_xz, q);
          const auto myz = matrix_element(bm, op_yz, q);
          if (mxz != 0.0 || myz != 0.0)
            pr_rev += (mxz * matrix_element(q, op_x, bn) +
                       myz * matrix_element(q, op_y, bn))
                          .real();
        }
        const double gap = energy_gap(nq, lq, two_jq, ref, cfg);
        const double scale =
            std::abs(pz) + std::abs(pr) + std::abs(pz_rev) + std::abs(pr_rev);
        if (std::abs(gap) < 1e-12) {
          if (scale > 1e-10)
            throw std::runtime_error("mixing_channels: degenerate channel " +
                                     level_name(nq, lq, two_jq));
          continue;  // reference level itself; all products vanish
        }
        // keep parity-allowed n=2 partners even when their products vanish
        // (the vanishing is itself a tested prediction)
        if (scale < 1e-20 && nq != 2) continue;
        MixingChannel ch;
        ch.gap = gap;
        ch.p_zq2 = pz;
        ch.p_rparz = pr;
        ch.p_zq2_rev = pz_rev;
        ch.p_rparz_rev = pr_rev;
        ch.t1 = pz + pz_rev;
        ch.t2 = ch.t1 - 2.0 * (pr + pr_rev);
        ch.label = level_name(nq, lq, two_jq);
        out.push_back(ch);
      }
    }
  }
  return out;
}

Polarizabilities static_polarizabilities(const RefState& ref, int n_max,
                                         const Config& cfg) {
  if (n_max < 2)
    throw std::domain_error("static_polarizabilities: n_max must be >= 2");
  Polarizabilities p;
  p.channels = dipole_channels(ref, n_max, cfg);
  for (const auto& ch : p.channels) {
    if (std::abs(ch.gap) < 1e-12)
      throw std::runtime_error("static_polarizabilities: degenerate channel");
    p.pi_par += ch.d_par_sq / ch.gap;
    p.pi_perp += 2.0 * ch.d_z_sq / ch.gap;
  }
  return p;
}

double Polarizabilities::pi_of_omega(double omega) const {
  double sum = 0.0;
  for (const auto& ch : channels) {
    const double a = ch.gap + omega, b = ch.gap - omega;
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
      throw std::domain_error("pi_of_omega: frequency at a pole");
    sum += (ch.d_par_sq + ch.d_z_sq) * (1.0 / a + 1.0 / b);
  }
  return sum / 3.0;
}

}  // namespace qedwall::hydrogen
