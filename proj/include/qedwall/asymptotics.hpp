// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_ASYMPTOTICS_HPP
#define QEDWALL_ASYMPTOTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qedwall/hydrogen.hpp"

namespace qedwall::asymptotics {

using qedwall::OutOfRegimeError;

// Choice of tail coefficients.
//  kConsistent: coefficients from the symbolic large-chi expansion of the
//               closed retarded forms (every term's error falls as 1/chi^2).
//  kStrict:     the published closed-form coefficient set, which differs in
//               two spots: the z-dipole sin/Z^2 energy coefficient carries an
//               extra factor 2, and the r_par z cos/Z^4 mixing coefficient
//               carries a quartic gap factor.
enum class TailForm { kConsistent, kStrict };

enum class Oscillation { kNone, kCos, kSin };

// One long-range term: value(Z) = coefficient * osc(2 gap Z) / Z^power.
struct TailTerm {
  int power_of_z;
  Oscillation oscillatory;
  double coefficient;
  double gap;           // 0 for non-oscillatory terms
  std::string channel;  // empty for aggregate terms

  double evaluate(double z_au) const;
};

struct TailResult {
  double total = 0.0;
  std::vector<TailTerm> terms;
};

// Long-range energy tail: oscillatory series from the downward channels plus
// the -(2 Pi_par + Pi_perp)/(8 pi Z^4) static-polarizability term.
// Requires chi = 2|gap|Z > 10 for every channel.
TailResult energy_tail(double z_au,
                       const std::vector<hydrogen::VirtualChannel>& channels,
                       TailForm form = TailForm::kConsistent);

// Long-range mixing tail: oscillatory r_par z and z q2 series from the
// downward channels plus the non-oscillatory 1/(pi Z^5) group over all
// channels.  Requires chi > 10 for every channel.
TailResult mixing_tail(double z_au,
                       const std::vector<hydrogen::MixingChannel>& channels,
                       TailForm form = TailForm::kConsistent);

// Leading admixture-coefficient tails for the metastable 2S level.
//   a_1/2 ~ 3 sqrt(3) / (pi L F Z^5)
//   a_3/2 ~ -sqrt(3/2) (3 L^3 / (F Z)) sin(2 L Z)
// Valid for Z >> 1/L (enforced as 2 L Z > 10).
double admixture_tail_a12(double z_au, const AtomicConstants& c);
double admixture_tail_a32(double z_au, const AtomicConstants& c);

}  // namespace qedwall::asymptotics

#endif
