// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_RETARDED_HPP
#define QEDWALL_RETARDED_HPP

#include <vector>

#include "qedwall/hydrogen.hpp"
#include "qedwall/specfun.hpp"

namespace qedwall::retarded {

// Signed virtual-state gap E_q = E_q - E_ref with its step-function bookkeeping.
struct SignedGap {
  double value;

  explicit SignedGap(double v) : value(v) {
    if (v == 0.0 || !std::isfinite(v))
      throw std::domain_error("SignedGap: gap must be finite and nonzero");
  }
  int epsilon() const { return value > 0.0 ? +1 : -1; }     // Theta(E)-Theta(-E)
  int theta_neg() const { return value < 0.0 ? 1 : 0; }     // Theta(-E)
  Chi chi(double z_au) const { return Chi::from_gap(value, z_au); }
};

// Closed forms of the regularized wave-number integrals
//   I1 = int dL cos(2LZ) ln|E+L|,        I2 = -d^2 I1/dchi^2,
//   J1 = int dL L sin(2LZ) ln|E+L|,      J2 = -d^2 J1/dchi^2,
// with the distance-independent constants dropped.
double i1(const SignedGap& gap, double z_au);
double i2(const SignedGap& gap, double z_au);
double j1(const SignedGap& gap, double z_au);
double j2(const SignedGap& gap, double z_au);

// Bracket functions of the channel sums (shared with the long-range tails).
// br1/br2 multiply (dpar^2 - 2 dz^2) and (dpar^2 + 2 dz^2) in the energy
// shift; m1/m2 multiply the T1 and T2 products in the mixing element.
// All four are evaluated in cancellation-free form, valid over the full
// chi range used here (1e-8 .. 1e12).
double br1(const SignedGap& gap, double chi);
double br2(const SignedGap& gap, double chi);
double m1(const SignedGap& gap, double chi);
double m2(const SignedGap& gap, double chi);

struct EvalNotes {
  double chi_min = 0.0;
  double chi_max = 0.0;
  bool chi_overflow_warning = false;  // chi beyond 1e8: tails recommended
};

// Retarded level shift, sum over channels:
//   dE = (1/2pi) sum_q gap^3 [ (dpar - 2 dz) br1 - (dpar + 2 dz) br2 ].
double energy_shift(double z_au,
                    const std::vector<hydrogen::VirtualChannel>& channels,
                    EvalNotes* notes = nullptr);

// Retarded parity-mixing element, sum over channels:
//   dM = (1/4pi) sum_q gap^4 [ t1 m1 + t2 m2 ].
double mixing_element(double z_au,
                      const std::vector<hydrogen::MixingChannel>& channels,
                      EvalNotes* notes = nullptr);

}  // namespace qedwall::retarded

#endif
