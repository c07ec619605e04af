// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/specfun.hpp"

#include <cassert>
#include <complex>
#include <string>

namespace qedwall::specfun {

namespace detail {

// Series: Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
//         Cin(x) = sum_{k>=1} (-1)^(k+1) x^(2k) / ((2k)(2k)!),  Ci = g + ln x - Cin.
template <class Real>
SiCi<Real> si_ci_series(Real x) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real si_sum = x;      // k = 0 term
  Real cin_sum = 0;
  Real term = x;        // x^(2k-1)/(2k-1)! entering iteration k
  for (int k = 1; k < 120; ++k) {
    // advance x^(2k-1)/(2k-1)! -> x^(2k)/(2k)! -> x^(2k+1)/(2k+1)!
    term *= x / (2 * k);
    cin_sum += ((k & 1) ? term : -term) / (2 * k);
    term *= x / (2 * k + 1);
    si_sum += ((k & 1) ? -term : term) / (2 * k + 1);
    if (term < eps * (std::abs(si_sum) + std::abs(cin_sum)) && k > 3) break;
  }
  const Real egamma = Real(0.57721566490153286060651209008240243L);
  SiCi<Real> out;
  out.si = si_sum;
  out.ci = egamma + std::log(x) - cin_sum;
  return out;
}

// Modified Lentz continued fraction for CF(z) = exp(z) E1(z) at z = i x:
//   CF(z) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
// and g(x) - i f(x) = CF(i x).
template <class Real>
FG<Real> fg_continued_fraction(Real x) {
  using C = std::complex<Real>;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real fpmin = std::numeric_limits<Real>::min() / eps;
  C b(1, x);
  C c(1 / fpmin, 0);
  C d = Real(1) / b;
  C h = d;
  for (int i = 1; i < 10000; ++i) {
    const Real a = -Real(i) * Real(i);
    b += Real(2);
    d = Real(1) / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1) + std::abs(del.imag()) < eps) break;
  }
  FG<Real> out;
  out.g = h.real();
  out.f = -h.imag();
  return out;
}

template SiCi<double> si_ci_series<double>(double);
template SiCi<long double> si_ci_series<long double>(long double);
template FG<double> fg_continued_fraction<double>(double);
template FG<long double> fg_continued_fraction<long double>(long double);

namespace {

constexpr double kSeriesCutoff = 8.0;
constexpr double kSubSeriesCutoff = 1.0e4;
constexpr double kPi = 3.14159265358979323846264338327950288;

struct FourValues {
  double si, ci, f, g;
};

// One evaluation giving all four of Si, Ci, f, g consistently.
FourValues eval(double x) {
  assert(x > 0.0);
  FourValues v{};
  if (x <= kSeriesCutoff) {
    const auto sc = si_ci_series(x);
    v.si = sc.si;
    v.ci = sc.ci;
    const double s = std::sin(x), c = std::cos(x);
    v.f = s * sc.ci - c * (sc.si - kPi / 2);
    v.g = -c * sc.ci - s * (sc.si - kPi / 2);
  } else {
    const auto fg = fg_continued_fraction(x);
    v.f = fg.f;
    v.g = fg.g;
    const double s = std::sin(x), c = std::cos(x);
    v.si = kPi / 2 - fg.f * c - fg.g * s;
    v.ci = fg.f * s - fg.g * c;
  }
  return v;
}

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

}  // namespace

}  // namespace detail

double sine_integral(double x) {
  detail::require_finite(x, "sine_integral");
  if (x < 0.0) throw std::domain_error("sine_integral: negative argument");
  if (x == 0.0) return 0.0;
  return detail::eval(x).si;
}

double cosine_integral(double x) {
  detail::require_finite(x, "cosine_integral");
  if (x <= 0.0) throw std::domain_error("cosine_integral: argument must be > 0");
  return detail::eval(x).ci;
}

double aux_f(double x) {
  detail::require_finite(x, "aux_f");
  if (x <= 0.0) throw std::domain_error("aux_f: argument must be > 0");
  return detail::eval(x).f;
}

double aux_g(double x) {
  detail::require_finite(x, "aux_g");
  if (x <= 0.0) throw std::domain_error("aux_g: argument must be > 0");
  return detail::eval(x).g;
}

double t_function(Chi chi) { return aux_f(chi.value); }

double u_function(Chi chi) { return -aux_g(chi.value); }

namespace {

// 1/x - f ~ sum_{k>=1} (-1)^(k+1) (2k)!/x^(2k+1)
double f_sub_series(double x) {
  const double ix2 = 1.0 / (x * x);
  double fact = 2.0;  // (2k)! at k = 1
  double pw = ix2 / x;
  double sum = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double term = fact * pw;
    sum += (k & 1) ? term : -term;
    if (term < 1e-22 * std::abs(sum)) break;
    fact *= (2 * k + 1) * (2 * k + 2);
    pw *= ix2;
  }
  return sum;
}

// 1/x^2 - g ~ sum_{k>=1} (-1)^(k+1) (2k+1)!/x^(2k+2)
double g_sub_series(double x) {
  const double ix2 = 1.0 / (x * x);
  double fact = 6.0;  // (2k+1)! at k = 1
  double pw = ix2 * ix2;
  double sum = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double term = fact * pw;
    sum += (k & 1) ? term : -term;
    if (term < 1e-22 * std::abs(sum)) break;
    fact *= (2 * k + 2) * (2 * k + 3);
    pw *= ix2;
  }
  return sum;
}

}  // namespace

double f_sub(double x) {
  detail::require_finite(x, "f_sub");
  if (x <= 0.0) throw std::domain_error("f_sub: argument must be > 0");
  if (x > detail::kSubSeriesCutoff) return f_sub_series(x);
  return 1.0 / x - aux_f(x);
}

double g_sub(double x) {
  detail::require_finite(x, "g_sub");
  if (x <= 0.0) throw std::domain_error("g_sub: argument must be > 0");
  if (x > detail::kSubSeriesCutoff) return g_sub_series(x);
  return 1.0 / (x * x) - aux_g(x);
}

}  // namespace qedwall::specfun
