// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.
//
// Brute-force numerical counterparts of the closed forms: principal-value
// frequency integrals, Abel-summed oscillatory wave-number integrals,
// direct 3D quadrature of spinor matrix elements, and extended-precision
// special functions.  Slow by design; shipped so every closed form in the
// library can be re-validated from first principles.

#ifndef QEDWALL_ORACLE_HPP
#define QEDWALL_ORACLE_HPP

#include <cmath>
#include <complex>
#include <functional>

#include "qedwall/hydrogen.hpp"

namespace qedwall::oracle {

// ---------------------------------------------------------------------------
// Generic quadrature helpers

// Composite 16-point Gauss-Legendre over [a, b] split into `panels` panels.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int panels = 1);

// tanh-sinh quadrature over (a, b); handles integrable endpoint
// singularities such as log |x - a|.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double eps = 1e-13);

// ---------------------------------------------------------------------------
// Principal-value frequency integral

enum class OmegaKernel { kOne, kOmega, kOmegaSquared };

// Knobs of the principal-value evaluation: symmetric excision half-width
// around the pole at w0 = -gap, integration cutoff, and the number of
// Richardson levels used to extrapolate the excision to zero.
struct PVSpec {
  double excision = 1e-3;
  double lambda;
  int richardson_levels = 4;

  // cutoff comfortably beyond both the gap scale and the photon scale 1/z
  static PVSpec for_distance(double gap, double z_au) {
    return {1e-3 * std::max(std::abs(gap), 1.0), 10.0 * std::max(std::abs(gap), 1.0 / z_au), 4};
  }
};

// PV int_L^Lambda  num(w) / (gap + w) dw with num = 1, w or w^2.  For
// gap < -L the pole at w0 = -gap lies inside the range and is handled by
// symmetric excision with Richardson extrapolation in the excision width.
double pv_omega_integral(double gap, double L, double lambda, OmegaKernel k,
                         double excision = 1e-3, int levels = 4);

inline double pv_omega_integral(double gap, double L, const PVSpec& spec,
                                OmegaKernel k) {
  return pv_omega_integral(gap, L, spec.lambda, k, spec.excision,
                           spec.richardson_levels);
}

// Closed form of the same integral (PV convention), for cross-checks.
double pv_omega_analytic(double gap, double L, double lambda, OmegaKernel k);

// ---------------------------------------------------------------------------
// Oscillatory wave-number integrals

enum class LKernel { kCos, kLSin, kL2Cos, kL3Sin };

// Abel-summed  int_0^inf K(L, Z) ln|gap + L| dL  evaluated at two distances
// and differenced, so the distance-independent (regularized) pieces cancel.
// K = cos(2LZ), L sin(2LZ), L^2 cos(2LZ) or L^3 sin(2LZ).
double oscillatory_L_integral(LKernel k, double gap, double z_a, double z_b);

// Single-distance Abel value (used internally and in convergence tests).
double oscillatory_L_value(LKernel k, double gap, double z);

// ---------------------------------------------------------------------------
// 3D spinor quadrature

// <bra| f(x,y,z) |ket> by direct numerical integration over R^3 with explicit
// spherical harmonics (independent of the Gaunt-coefficient path).
std::complex<double> spinor_element_quadrature(
    const hydrogen::Spinor& bra,
    const std::function<std::complex<double>(double, double, double)>& op,
    const hydrogen::Spinor& ket);

// ---------------------------------------------------------------------------
// Closure checks

enum class ClosureOperator { kRpar2Plus2z2, kZTimesRpar2Plus2z2 };

struct ClosureCheck {
  double direct;   // <m|Op|n> by 3D quadrature
  double partial;  // matching partial closure sum over levels up to n_max
  double gap() const { return direct - partial; }
};

// For kRpar2Plus2z2:       partial = sum_q [<m|rpar|q>.<q|rpar|n> + 2<m|z|q><q|z|n>]
// For kZTimesRpar2Plus2z2: partial = -(1/2) sum_q t2(q)  (dipole-quadrupole closure)
ClosureCheck closure_expectation(ClosureOperator op, hydrogen::LevelLabel m,
                                 hydrogen::LevelLabel n, int n_max,
                                 const Config& cfg);

// ---------------------------------------------------------------------------
// Extended-precision special functions (series at small argument, Laplace-type
// integral representation above; both independent of the production path).

long double si_highprec(long double x);
long double ci_highprec(long double x);
long double t_highprec(long double chi);
long double u_highprec(long double chi);

}  // namespace qedwall::oracle

#endif
