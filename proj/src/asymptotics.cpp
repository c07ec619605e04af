// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/asymptotics.hpp"

#include <cmath>

namespace qedwall::asymptotics {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_regime(double z_au, double min_abs_gap, const char* who) {
  if (!(z_au > 0.0)) throw std::domain_error(std::string(who) + ": need z > 0");
  const double chi_min = 2.0 * min_abs_gap * z_au;
  if (!(chi_min > 10.0))
    throw OutOfRegimeError(std::string(who) +
                           ": chi_min <= 10, long-range form not applicable");
}

}  // namespace

double TailTerm::evaluate(double z_au) const {
  double osc = 1.0;
  switch (oscillatory) {
    case Oscillation::kNone: osc = 1.0; break;
    case Oscillation::kCos: osc = std::cos(2.0 * gap * z_au); break;
    case Oscillation::kSin: osc = std::sin(2.0 * gap * z_au); break;
  }
  return coefficient * osc / std::pow(z_au, power_of_z);
}

TailResult energy_tail(double z_au,
                       const std::vector<hydrogen::VirtualChannel>& channels,
                       TailForm form) {
  if (channels.empty()) return {};
  double min_gap = std::abs(channels.front().gap);
  for (const auto& ch : channels) min_gap = std::min(min_gap, std::abs(ch.gap));
  check_regime(z_au, min_gap, "energy_tail");

  TailResult out;
  double pi_par = 0.0, pi_perp = 0.0;
  for (const auto& ch : channels) {
    pi_par += ch.d_par_sq / ch.gap;
    pi_perp += 2.0 * ch.d_z_sq / ch.gap;
    if (ch.gap >= 0.0) continue;  // only downward channels oscillate
    const double e = ch.gap;
    out.terms.push_back(
        {1, Oscillation::kCos, ch.d_par_sq * e * e / 2.0, e, ch.label});
    const double sin_weight = (form == TailForm::kStrict)
                                  ? (ch.d_par_sq + 4.0 * ch.d_z_sq)
                                  : (ch.d_par_sq + 2.0 * ch.d_z_sq);
    out.terms.push_back({2, Oscillation::kSin, -sin_weight * e / 4.0, e, ch.label});
    out.terms.push_back(
        {3, Oscillation::kCos, -(ch.d_par_sq + 2.0 * ch.d_z_sq) / 8.0, e,
         ch.label});
  }
  out.terms.push_back(
      {4, Oscillation::kNone, -(2.0 * pi_par + pi_perp) / (8.0 * kPi), 0.0, ""});
  for (const auto& t : out.terms) out.total += t.evaluate(z_au);
  return out;
}

TailResult mixing_tail(double z_au,
                       const std::vector<hydrogen::MixingChannel>& channels,
                       TailForm form) {
  if (channels.empty()) return {};
  double min_gap = std::abs(channels.front().gap);
  for (const auto& ch : channels) min_gap = std::min(min_gap, std::abs(ch.gap));
  check_regime(z_au, min_gap, "mixing_tail");

  TailResult out;
  double smooth5 = 0.0;
  for (const auto& ch : channels) {
    const double pr = ch.p_rparz + ch.p_rparz_rev;
    const double pz = ch.p_zq2 + ch.p_zq2_rev;
    smooth5 += (3.0 * pr - pz) / (8.0 * ch.gap);
    if (ch.gap >= 0.0) continue;
    const double e = ch.gap;
    const double e2 = e * e, e3 = e2 * e, e4 = e2 * e2;
    // r_par z product series
    out.terms.push_back({1, Oscillation::kSin, -pr * e3 / 4.0, e, ch.label});
    out.terms.push_back({2, Oscillation::kCos, -3.0 * pr * e2 / 8.0, e, ch.label});
    out.terms.push_back({3, Oscillation::kSin, 3.0 * pr * e / 8.0, e, ch.label});
    out.terms.push_back({4, Oscillation::kCos,
                         (form == TailForm::kStrict) ? 3.0 * pr * e4 / 16.0
                                                     : 3.0 * pr / 16.0,
                         e, ch.label});
    // z quadrupole product series
    out.terms.push_back({2, Oscillation::kCos, pz * e2 / 8.0, e, ch.label});
    out.terms.push_back({3, Oscillation::kSin, -3.0 * pz * e / 16.0, e, ch.label});
    out.terms.push_back({4, Oscillation::kCos, -3.0 * pz / 32.0, e, ch.label});
  }
  out.terms.push_back({5, Oscillation::kNone, smooth5 / kPi, 0.0, ""});
  for (const auto& t : out.terms) out.total += t.evaluate(z_au);
  return out;
}

double admixture_tail_a12(double z_au, const AtomicConstants& c) {
  check_regime(z_au, c.lamb_shift, "admixture_tail_a12");
  return 3.0 * std::sqrt(3.0) /
         (kPi * c.lamb_shift * c.fine_structure * std::pow(z_au, 5));
}

double admixture_tail_a32(double z_au, const AtomicConstants& c) {
  check_regime(z_au, c.lamb_shift, "admixture_tail_a32");
  const double l3 = std::pow(c.lamb_shift, 3);
  return -std::sqrt(1.5) * 3.0 * l3 / (c.fine_structure * z_au) *
         std::sin(2.0 * c.lamb_shift * z_au);
}

}  // namespace qedwall::asymptotics
