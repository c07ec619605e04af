// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_CONFIG_HPP
#define QEDWALL_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace qedwall {

// Thrown when a long-range closed form is requested outside its validity
// window instead of extrapolating.
class OutOfRegimeError : public std::domain_error {
 public:
  explicit OutOfRegimeError(const std::string& what)
      : std::domain_error(what) {}
};

// Gap bookkeeping for the n=2 fine-structure ladder.  The energies entering
// the coupled-state analysis place 2P_1/2 at zero and 2S_1/2 at the Lamb
// shift L.  The 2P_3/2 placement is convention-dependent:
//   kLambPlusFine: 2P_3/2 at L + F, i.e. the 2S -> 2P_3/2 gap is exactly F
//                  (matches the closed admixture formulas; default).
//   kFineOnly:     2P_3/2 at F above 2P_1/2, i.e. the 2S -> 2P_3/2 gap is F - L.
enum class GapConvention { kLambPlusFine, kFineOnly };

struct AtomicConstants {
  double lamb_shift = 1.61e-7;       // 2S_1/2 - 2P_1/2 interval, a.u.
  double fine_structure = 1.66e-6;   // 2P_3/2 - 2P_1/2 interval, a.u.
  double gamma_2s = 1.99e-16;        // two-photon 2S width, a.u.
  double gamma_2p = 1.51e-8;         // one-photon 2P width, a.u.
  double au_to_mhz = 6.57968392050e9;  // hartree -> MHz, 12 digits

  void validate() const {
    if (!(fine_structure > lamb_shift) || !(lamb_shift > 0.0))
      throw std::invalid_argument("AtomicConstants: need F > L > 0");
    if (!(gamma_2s > 0.0) || !(gamma_2p > 0.0))
      throw std::invalid_argument("AtomicConstants: widths must be positive");
    // The unit conversion must reproduce the (-4.52e-9 a.u., -29.7 MHz) pair
    // to 1%.
    const double mhz = 4.52e-9 * au_to_mhz;
    if (std::abs(mhz - 29.7) / 29.7 > 0.01)
      throw std::invalid_argument("AtomicConstants: au_to_mhz inconsistent");
  }
};

struct Config {
  AtomicConstants constants;
  GapConvention gap_convention = GapConvention::kLambPlusFine;
  int n_max = 2;  // principal quantum number cutoff for virtual states (2..6)

  void validate() const {
    constants.validate();
    if (n_max < 2 || n_max > 6)
      throw std::invalid_argument("Config: n_max must be in [2, 6]");
  }
};

// Flat key=value configuration files.  '#' starts a comment, blank lines are
// skipped.  Unknown keys are an error so typos do not pass silently.
Config load_config_file(const std::string& path);
Config parse_config_text(const std::string& text);

// Serialize the active constants as "key=value" lines (used for run headers).
std::map<std::string, std::string> config_echo(const Config& cfg);

}  // namespace qedwall

#endif
