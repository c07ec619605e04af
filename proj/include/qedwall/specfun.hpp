// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_SPECFUN_HPP
#define QEDWALL_SPECFUN_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qedwall {

// Dimensionless retardation parameter chi = 2 |gap| Z.  Always > 0.
struct Chi {
  double value;

  explicit Chi(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("Chi: argument must be finite and positive");
  }
  static Chi from_gap(double gap_au, double z_au) {
    return Chi(2.0 * std::abs(gap_au) * z_au);
  }
};

namespace specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// Si(x) = int_0^x sin(t)/t dt, for x >= 0.
double sine_integral(double x);

// Ci(x) = -int_x^inf cos(t)/t dt, for x > 0.
double cosine_integral(double x);

// T(chi) = sin(chi) Ci(chi) - cos(chi) Si(chi) + (pi/2) cos(chi).
// Equals the auxiliary function f(chi), smooth and ~1/chi at large chi.
double t_function(Chi chi);

// U(chi) = dT/dchi = cos(chi) Ci(chi) + sin(chi) Si(chi) - (pi/2) sin(chi).
// Equals -g(chi); diverges as log(chi) for chi -> 0.
double u_function(Chi chi);

// Auxiliary functions with Si(x) = pi/2 - f cos - g sin, Ci = f sin - g cos.
// f ~ 1/x - 2/x^3 + ..., g ~ 1/x^2 - 6/x^4 + ... for large x.
double aux_f(double x);
double aux_g(double x);

// Cancellation-managed combinations 1/x - f(x) and 1/x^2 - g(x).  These are
// the O(1/x^3) and O(1/x^4) residues that drive the long-range tails; they
// switch to their asymptotic series above x = 1e4 where direct subtraction
// runs out of digits.
double f_sub(double x);
double g_sub(double x);

namespace detail {

template <class Real>
struct FG {
  Real f, g;
};

// Power series for Si/Ci, usable for x <= ~18 (long double) or ~8 (double).
template <class Real>
struct SiCi {
  Real si, ci;
};

template <class Real>
SiCi<Real> si_ci_series(Real x);

// Continued-fraction evaluation of the auxiliary functions (modified Lentz
// applied to exp(z) E1(z) at z = i x).  Accurate to machine precision for
// x >~ 4.
template <class Real>
FG<Real> fg_continued_fraction(Real x);

extern template SiCi<double> si_ci_series<double>(double);
extern template SiCi<long double> si_ci_series<long double>(long double);
extern template FG<double> fg_continued_fraction<double>(double);
extern template FG<long double> fg_continued_fraction<long double>(long double);

}  // namespace detail

}  // namespace specfun
}  // namespace qedwall

#endif
