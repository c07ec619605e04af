// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/retarded.hpp"

#include <cmath>

namespace qedwall::retarded {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using specfun::aux_f;
using specfun::aux_g;
using specfun::f_sub;
using specfun::g_sub;

// d^2/dchi^2 [ 2 sin^2(chi/2) / chi ]; power series below chi = 0.5
double s1_dd(double chi) {
  if (chi < 0.5) {
    const double c2 = chi * chi;
    return chi * (-1.0 / 4.0 +
                  c2 * (1.0 / 36.0 +
                        c2 * (-1.0 / 960.0 + c2 * (1.0 / 50400.0))));
  }
  const double s = std::sin(chi), c = std::cos(chi);
  return c / chi - 2.0 * s / (chi * chi) +
         2.0 * (1.0 - c) / (chi * chi * chi);
}

// d^2/dchi^2 [ (2 sin^2(chi/2) - chi sin chi) / chi^2 ]; series below 0.5
double s2_dd(double chi) {
  if (chi < 0.5) {
    const double c2 = chi * chi;
    return 1.0 / 4.0 +
           c2 * (-1.0 / 12.0 + c2 * (1.0 / 192.0 + c2 * (-1.0 / 7200.0)));
  }
  const double s = std::sin(chi), c = std::cos(chi);
  const double c3 = chi * chi * chi;
  return s / chi + 3.0 * c / (chi * chi) - 6.0 * s / c3 +
         6.0 * (1.0 - c) / (c3 * chi);
}

}  // namespace

double br1(const SignedGap& gap, double chi) {
  double v = -f_sub(chi) / chi;
  if (gap.theta_neg()) v += -kPi * std::cos(chi) / chi;
  return v;
}

double br2(const SignedGap& gap, double chi) {
  const double c2 = chi * chi, c3 = c2 * chi;
  double v = f_sub(chi) / chi + 2.0 * aux_f(chi) / c3 + 2.0 * aux_g(chi) / c2;
  if (gap.theta_neg()) v += kPi * (s1_dd(chi) - 2.0 / c3);
  return v;
}

double m1(const SignedGap& gap, double chi) {
  const double c2 = chi * chi;
  double v = gap.epsilon() * (f_sub(chi) / c2 + g_sub(chi) / chi);
  if (gap.theta_neg())
    v += -kPi * (std::cos(chi) + chi * std::sin(chi)) / c2;
  return v;
}

double m2(const SignedGap& gap, double chi) {
  const double c2 = chi * chi, c3 = c2 * chi, c4 = c2 * c2;
  double v = -gap.epsilon() * (3.0 * f_sub(chi) / c2 + g_sub(chi) / chi +
                               6.0 * aux_f(chi) / c4 + 6.0 * aux_g(chi) / c3);
  if (gap.theta_neg()) v += kPi * (s2_dd(chi) - 6.0 / c4);
  return v;
}

double i1(const SignedGap& gap, double z_au) {
  const double chi = gap.chi(z_au).value;
  const double t = aux_f(chi);
  if (gap.theta_neg()) return gap.value * (kPi * std::cos(chi) - t) / chi;
  return -gap.value * t / chi;
}

double i2(const SignedGap& gap, double z_au) {
  const double chi = gap.chi(z_au).value;
  return gap.value * br2(gap, chi);
}

double j1(const SignedGap& gap, double z_au) {
  const double chi = gap.chi(z_au).value;
  const double e2 = gap.value * gap.value;
  const double smooth = aux_f(chi) / (chi * chi) + aux_g(chi) / chi;
  if (gap.theta_neg())
    return e2 * (smooth -
                 kPi * (std::cos(chi) + chi * std::sin(chi)) / (chi * chi));
  return -e2 * smooth;
}

double j2(const SignedGap& gap, double z_au) {
  const double chi = gap.chi(z_au).value;
  return -gap.value * gap.value * m2(gap, chi);
}

double energy_shift(double z_au,
                    const std::vector<hydrogen::VirtualChannel>& channels,
                    EvalNotes* notes) {
  if (!(z_au > 0.0)) throw std::domain_error("energy_shift: need z > 0");
  if (channels.empty())
    throw std::domain_error("energy_shift: empty channel table");
  double sum = 0.0;
  double chi_min = 0.0, chi_max = 0.0;
  bool first = true;
  for (const auto& ch : channels) {
    const SignedGap gap(ch.gap);
    const double chi = gap.chi(z_au).value;
    if (first || chi < chi_min) chi_min = chi;
    if (first || chi > chi_max) chi_max = chi;
    first = false;
    const double g3 = ch.gap * ch.gap * ch.gap;
    sum += g3 * ((ch.d_par_sq - 2.0 * ch.d_z_sq) * br1(gap, chi) -
                 (ch.d_par_sq + 2.0 * ch.d_z_sq) * br2(gap, chi));
  }
  if (notes) {
    notes->chi_min = chi_min;
    notes->chi_max = chi_max;
    notes->chi_overflow_warning = chi_max > 1e8;
  }
  return sum / (2.0 * kPi);
}

double mixing_element(double z_au,
                      const std::vector<hydrogen::MixingChannel>& channels,
                      EvalNotes* notes) {
  if (!(z_au > 0.0)) throw std::domain_error("mixing_element: need z > 0");
  double sum = 0.0;
  double chi_min = 0.0, chi_max = 0.0;
  bool first = true;
  for (const auto& ch : channels) {
    const SignedGap gap(ch.gap);
    const double chi = gap.chi(z_au).value;
    if (first || chi < chi_min) chi_min = chi;
    if (first || chi > chi_max) chi_max = chi;
    first = false;
    const double g4 = ch.gap * ch.gap * ch.gap * ch.gap;
    sum += g4 * (ch.t1 * m1(gap, chi) + ch.t2 * m2(gap, chi));
  }
  if (notes) {
    notes->chi_min = chi_min;
    notes->chi_max = chi_max;
    notes->chi_overflow_warning = chi_max > 1e8;
  }
  return sum / (4.0 * kPi);
}

}  // namespace qedwall::retarded
