// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qedwall/specfun.hpp"

namespace qedwall::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// 16-point Gauss-Legendre rule on [-1, 1] (symmetric halves)
constexpr int kGL = 8;
constexpr double kGLx[kGL] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGLw[kGL] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <class F>
double gl_panel(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), s = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kGL; ++i)
    acc += kGLw[i] * (f(c + s * kGLx[i]) + f(c - s * kGLx[i]));
  return acc * s;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  double sum = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) sum += gl_panel(f, a + p * h, a + (p + 1) * h);
  return sum;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double eps) {
  (void)eps;  // fixed-step rule; step chosen for ~1e-14 on log singularities
  const double c = 0.5 * (a + b), s = 0.5 * (b - a);
  const double h = 1.0 / 32.0;
  double sum = 0.0;
  for (int k = -400; k <= 400; ++k) {
    const double t = k * h;
    const double u = 0.5 * kPi * std::sinh(t);
    const double x = std::tanh(u);
    if (1.0 - std::abs(x) < 1e-16) continue;
    const double w = 0.5 * kPi * std::cosh(t) / std::pow(std::cosh(u), 2);
    const double v = f(c + s * x);
    if (!std::isfinite(v)) continue;  // rounding hit an endpoint singularity
    sum += w * v;
  }
  return sum * h * s;
}

// ---------------------------------------------------------------------------
// PV frequency integral

double pv_omega_analytic(double gap, double L, double lambda, OmegaKernel k) {
  const double lg = std::log(std::abs(gap + lambda) / std::abs(gap + L));
  switch (k) {
    case OmegaKernel::kOne:
      return lg;
    case OmegaKernel::kOmega:
      return (lambda - L) - gap * lg;
    case OmegaKernel::kOmegaSquared:
      return 0.5 * (lambda * lambda - L * L) - gap * (lambda - L) +
             gap * gap * lg;
  }
  return 0.0;
}

namespace {

double omega_numerator(double w, OmegaKernel k) {
  switch (k) {
    case OmegaKernel::kOne: return 1.0;
    case OmegaKernel::kOmega: return w;
    case OmegaKernel::kOmegaSquared: return w * w;
  }
  return 0.0;
}

// integrate f over [far, pole - h] (or [pole + h, far] mirrored) with panels
// graded geometrically toward the pole
template <class F>
double graded_toward_pole(const F& f, double far_end, double pole, double h,
                          bool pole_on_right) {
  const double room = std::abs(pole - far_end);
  double sum = 0.0;
  double d_outer = room;
  while (d_outer > 2.0 * h) {
    const double d_inner = std::max(h, 0.5 * d_outer);
    const double a = pole_on_right ? pole - d_outer : pole + d_inner;
    const double b = pole_on_right ? pole - d_inner : pole + d_outer;
    sum += gl_panel(f, a, b);
    d_outer = d_inner;
  }
  if (d_outer > h) {
    const double a = pole_on_right ? pole - d_outer : pole + h;
    const double b = pole_on_right ? pole - h : pole + d_outer;
    sum += gl_panel(f, a, b);
  }
  return sum;
}

}  // namespace

double pv_omega_integral(double gap, double L, double lambda, OmegaKernel k,
                         double excision, int levels) {
  if (!(lambda > L)) throw std::domain_error("pv_omega_integral: need lambda > L");
  if (L < 0.0) throw std::domain_error("pv_omega_integral: need L >= 0");
  const double pole = -gap;
  const auto f = [&](double w) { return omega_numerator(w, k) / (gap + w); };

  const bool pole_inside = pole > L && pole < lambda;
  if (!pole_inside) return gauss_legendre(f, L, lambda, 256);

  const double room = std::min(pole - L, lambda - pole);
  if (excision >= 0.5 * room)
    throw std::domain_error("pv_omega_integral: pole too close to an endpoint");

  std::vector<double> vals;
  double h = excision;
  for (int i = 0; i < levels; ++i) {
    double v = 0.0;
    // smooth outer parts
    if (pole - room > L) v += gauss_legendre(f, L, pole - room, 64);
    if (pole + room < lambda) v += gauss_legendre(f, pole + room, lambda, 64);
    // graded approach to the symmetric excision window
    v += graded_toward_pole(f, pole - room, pole, h, true);
    v += graded_toward_pole(f, pole + room, pole, h, false);
    vals.push_back(v);
    h *= 0.5;
  }
  // Richardson extrapolation in the excision width (error ~ c1 h + c2 h^2 ...)
  for (size_t m = 1; m < vals.size(); ++m)
    for (size_t i = vals.size() - 1; i >= m; --i)
      vals[i] = (std::pow(2.0, m) * vals[i] - vals[i - 1]) /
                (std::pow(2.0, m) - 1.0);
  return vals.back();
}

// ---------------------------------------------------------------------------
// Oscillatory wave-number integrals

namespace {

double l_kernel(LKernel k, double L, double z) {
  switch (k) {
    case LKernel::kCos: return std::cos(2.0 * L * z);
    case LKernel::kLSin: return L * std::sin(2.0 * L * z);
    case LKernel::kL2Cos: return L * L * std::cos(2.0 * L * z);
    case LKernel::kL3Sin: return L * L * L * std::sin(2.0 * L * z);
  }
  return 0.0;
}

}  // namespace

double oscillatory_L_value(LKernel k, double gap, double z) {
  if (!(z > 0.0)) throw std::domain_error("oscillatory_L_value: need z > 0");
  const double ls = (gap < 0.0) ? -gap : -1.0;  // log singularity position
  const double h = kPi / (2.0 * z);             // kernel half period
  const auto f = [&](double L) {
    return l_kernel(k, L, z) * std::log(std::abs(gap + L));
  };

  // head: resolve every half period out to a boundary beyond the singular
  // region and the ln|gap| scale
  double head_end = std::max({4.0 * std::abs(gap), 8.0 * h});
  int n_head = std::min(static_cast<int>(std::ceil(head_end / h)), 6000);
  head_end = n_head * h;

  // panel boundaries: half periods of the kernel, geometric points resolving
  // the curvature scale of ln|gap + L|, and the singularity itself
  std::vector<double> cuts;
  for (int i = 0; i <= n_head; ++i) cuts.push_back(i * h);
  for (double g = std::abs(gap) / 8.0; g < head_end; g *= 2.0)
    cuts.push_back(g);
  if (ls > 0.0 && ls < head_end) cuts.push_back(ls);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-14 * b; }),
             cuts.end());

  double head = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (ls >= a && ls <= b && ls > 0.0) {
      if (ls > a) head += tanh_sinh(f, a, ls);
      if (b > ls) head += tanh_sinh(f, ls, b);
    } else {
      head += gl_panel(f, a, b);
    }
  }

  // tail: iterated averaging (Euler summation) of half-period partial sums
  const int n_terms = 64;
  std::vector<double> row(n_terms);
  double run = head;
  for (int i = 0; i < n_terms; ++i) {
    run += gl_panel(f, head_end + i * h, head_end + (i + 1) * h);
    row[i] = run;
  }
  while (row.size() > 6) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row[row.size() / 2];
}

double oscillatory_L_integral(LKernel k, double gap, double z_a, double z_b) {
  if (z_a == z_b)
    throw std::domain_error("oscillatory_L_integral: distances must differ");
  return oscillatory_L_value(k, gap, z_a) - oscillatory_L_value(k, gap, z_b);
}

// ---------------------------------------------------------------------------
// 3D spinor quadrature

namespace {

// explicit spherical harmonics, l <= 2
std::complex<double> ylm(int l, int m, double ct, double st, double phi) {
  const std::complex<double> eip(std::cos(phi), std::sin(phi));
  if (l == 0 && m == 0) return {0.28209479177387814, 0.0};
  if (l == 1) {
    if (m == -1) return 0.3454941494713355 * st * std::conj(eip);
    if (m == 0) return {0.4886025119029199 * ct, 0.0};
    if (m == 1) return -0.3454941494713355 * st * eip;
  }
  if (l == 2) {
    if (m == -2) return 0.38627420202318958 * st * st * std::conj(eip * eip);
    if (m == -1) return 0.77254840404637916 * st * ct * std::conj(eip);
    if (m == 0) return {0.31539156525252005 * (3.0 * ct * ct - 1.0), 0.0};
    if (m == 1) return -0.77254840404637916 * st * ct * eip;
    if (m == 2) return 0.38627420202318958 * st * st * eip * eip;
  }
  throw std::domain_error("ylm: l > 2 not tabulated");
}

}  // namespace

std::complex<double> spinor_element_quadrature(
    const hydrogen::Spinor& bra,
    const std::function<std::complex<double>(double, double, double)>& op,
    const hydrogen::Spinor& ket) {
  const int n_panels = 14;
  const int n_ct_panels = 2;
  const int n_phi = 24;
  const double rmax = 40.0 * std::max(bra.n, ket.n);
  const double hr = rmax / n_panels;

  std::complex<double> total(0.0, 0.0);
  for (int pr = 0; pr < n_panels; ++pr) {
    const double cr = (pr + 0.5) * hr, sr = 0.5 * hr;
    for (int ir = 0; ir < 2 * kGL; ++ir) {
      const int idx = ir % kGL;
      const double r = (ir < kGL) ? cr + sr * kGLx[idx] : cr - sr * kGLx[idx];
      const double wr = kGLw[idx] * sr;
      const double rb = hydrogen::radial_wavefunction(bra.n, bra.l, r);
      const double rk = hydrogen::radial_wavefunction(ket.n, ket.l, r);
      const double rad = wr * r * r * rb * rk;
      if (rad == 0.0) continue;
      for (int pc = 0; pc < n_ct_panels; ++pc) {
        const double cc = -1.0 + (pc + 0.5) * (2.0 / n_ct_panels);
        const double sc = 1.0 / n_ct_panels;
        for (int ic = 0; ic < 2 * kGL; ++ic) {
          const int jdx = ic % kGL;
          const double ct =
              (ic < kGL) ? cc + sc * kGLx[jdx] : cc - sc * kGLx[jdx];
          const double wct = kGLw[jdx] * sc;
          const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
          for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = 2.0 * kPi * ip / n_phi;
            const double wphi = 2.0 * kPi / n_phi;
            std::complex<double> spin_sum(0.0, 0.0);
            for (const auto& cb : bra.components)
              for (const auto& ck : ket.components) {
                if (cb.two_ms != ck.two_ms) continue;
                spin_sum += cb.coeff * ck.coeff *
                            std::conj(ylm(bra.l, cb.m_l, ct, st, phi)) *
                            ylm(ket.l, ck.m_l, ct, st, phi);
              }
            if (spin_sum == std::complex<double>(0.0, 0.0)) continue;
            const double xx = r * st * std::cos(phi);
            const double yy = r * st * std::sin(phi);
            const double zz = r * ct;
            total += rad * wct * wphi * spin_sum * op(xx, yy, zz);
          }
        }
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Closure checks

ClosureCheck closure_expectation(ClosureOperator op, hydrogen::LevelLabel m,
                                 hydrogen::LevelLabel n, int n_max,
                                 const Config& cfg) {
  using hydrogen::make_spinor;
  using hydrogen::matrix_element;
  const auto bm = make_spinor(2, m, 1);
  const auto bn = make_spinor(2, n, 1);
  ClosureCheck out{};

  if (op == ClosureOperator::kRpar2Plus2z2) {
    out.direct =
        spinor_element_quadrature(
            bm,
            [](double x, double y, double z) {
              return std::complex<double>(x * x + y * y + 2.0 * z * z, 0.0);
            },
            bn)
            .real();
    const auto opx = hydrogen::ops::x();
    const auto opy = hydrogen::ops::y();
    const auto opz = hydrogen::ops::z();
    double sum = 0.0;
    for (int nq = 1; nq <= n_max; ++nq) {
      for (int lq = 0; lq < nq && lq <= 2; ++lq) {
        for (int two_jq = std::abs(2 * lq - 1); two_jq <= 2 * lq + 1;
             two_jq += 2) {
          for (int two_mu = -two_jq; two_mu <= two_jq; two_mu += 2) {
            const auto q = make_spinor(nq, lq, two_jq, two_mu);
            sum += (matrix_element(bm, opx, q) * matrix_element(q, opx, bn) +
                    matrix_element(bm, opy, q) * matrix_element(q, opy, bn) +
                    2.0 * matrix_element(bm, opz, q) *
                        matrix_element(q, opz, bn))
                       .real();
          }
        }
      }
    }
    out.partial = sum;
  } else {
    out.direct =
        spinor_element_quadrature(
            bm,
            [](double x, double y, double z) {
              return std::complex<double>(
                  3.0 * z * (x * x + y * y + 2.0 * z * z), 0.0);
            },
            bn)
            .real();
    // dipole-quadrupole closure: sum_q t2(q) -> -2 <m| z (rpar^2 + 2 z^2) |n>
    const auto chans = hydrogen::mixing_channels(m, n, n_max, cfg);
    double sum = 0.0;
    for (const auto& ch : chans) sum += ch.t2;
    out.partial = -1.5 * sum;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extended-precision special functions

namespace {

// int_0^inf e^(-u)/(1+(u/x)^2) du / x, optionally with an extra (u/x) factor
long double laplace_fg(long double x, bool want_g) {
  static const long double nodes[8] = {
      0.09501250983763744018531934L, 0.28160355077925891323046050L,
      0.45801677765722738634241944L, 0.61787624440264374844667176L,
      0.75540440835500303389510119L, 0.86563120238783174388046789L,
      0.94457502307323257607798842L, 0.98940093499164993259615417L};
  static const long double weights[8] = {
      0.18945061045506849628539672L, 0.18260341504492358886676366L,
      0.16915651939500253818931208L, 0.14959598881657673208150173L,
      0.12462897125553387205247628L, 0.09515851168249278480992510L,
      0.06225352393864789286284384L, 0.02715245941175409485178057L};
  const int panels = 26;
  const long double umax = 52.0L;
  const long double h = umax / panels;
  long double sum = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double c = (p + 0.5L) * h, s = 0.5L * h;
    for (int i = 0; i < 8; ++i) {
      for (int sign = -1; sign <= 1; sign += 2) {
        const long double u = c + sign * s * nodes[i];
        const long double den = 1.0L + (u / x) * (u / x);
        sum += weights[i] * s * std::exp(-u) / den * (want_g ? (u / x) : 1.0L);
      }
    }
  }
  return sum / x;
}

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

}  // namespace

long double t_highprec(long double chi) {
  if (chi <= 0.0L) throw std::domain_error("t_highprec: chi must be > 0");
  if (chi <= 12.0L) {
    const auto sc = specfun::detail::si_ci_series<long double>(chi);
    return std::sin(chi) * sc.ci - std::cos(chi) * (sc.si - kPiL / 2);
  }
  return laplace_fg(chi, false);  // T = f
}

long double u_highprec(long double chi) {
  if (chi <= 0.0L) throw std::domain_error("u_highprec: chi must be > 0");
  if (chi <= 12.0L) {
    const auto sc = specfun::detail::si_ci_series<long double>(chi);
    return std::cos(chi) * sc.ci + std::sin(chi) * (sc.si - kPiL / 2);
  }
  return -laplace_fg(chi, true);  // U = -g
}

long double si_highprec(long double x) {
  if (x < 0.0L) throw std::domain_error("si_highprec: negative argument");
  if (x == 0.0L) return 0.0L;
  if (x <= 12.0L) return specfun::detail::si_ci_series<long double>(x).si;
  const long double f = laplace_fg(x, false);
  const long double g = laplace_fg(x, true);
  return kPiL / 2 - f * std::cos(x) - g * std::sin(x);
}

long double ci_highprec(long double x) {
  if (x <= 0.0L) throw std::domain_error("ci_highprec: argument must be > 0");
  if (x <= 12.0L) return specfun::detail::si_ci_series<long double>(x).ci;
  const long double f = laplace_fg(x, false);
  const long double g = laplace_fg(x, true);
  return f * std::sin(x) - g * std::cos(x);
}

}  // namespace qedwall::oracle
