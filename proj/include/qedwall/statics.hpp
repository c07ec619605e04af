// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_STATICS_HPP
#define QEDWALL_STATICS_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "qedwall/config.hpp"
#include "qedwall/hydrogen.hpp"

namespace qedwall::statics {

class TrackingError : public std::runtime_error {
 public:
  explicit TrackingError(const std::string& what) : std::runtime_error(what) {}
};

// One adiabatic eigenstate in the (2S_1/2, 2P_1/2, 2P_3/2), mu = +1/2 basis.
struct CoupledState {
  Eigen::Vector3d coefficients;  // (a_S, a_1/2, a_3/2)
  double eigenvalue;             // a.u., measured from the free 2P_1/2 level
  hydrogen::LevelLabel branch;
};

struct DecayProfile {
  double z_au;
  double xi;
  double gamma_eff;  // a.u.
};

// Instantaneous mirror-charge potential of the electron-proton pair in front
// of a perfect conductor; electron at (x, y, Z + z), proton at (0, 0, Z).
double mirror_potential_exact(double x, double y, double z, double z_wall_au);

// Multipole expansion of the mirror potential through 1/Z^order (3 <= order
// <= 6), evaluated at a point (for expansion checks).
double mirror_potential_multipole(double x, double y, double z,
                                  double z_wall_au, int order);

// 3x3 coupled-level matrix: free-level diagonal (L, 0, E_P32) plus multipole
// matrix elements of the mirror potential through the requested order.
Eigen::Matrix3d multipole_matrix(double z_au, int order, const Config& cfg);

// Slow verification path: matrix elements of the exact mirror potential by
// 3D quadrature over the explicit spinor wavefunctions.
Eigen::Matrix3d exact_matrix(double z_au, const Config& cfg);

// Diagonalization along a strictly monotone grid with branch tracking by
// eigenvector overlap (states must stay connected across avoided crossings).
// Returns one entry per grid point, in input order.
std::vector<std::array<CoupledState, 3>> adiabatic_spectrum(
    const std::vector<double>& z_grid, const Config& cfg, int order = 6);

// Closed asymptotic admixture triples for the three coupled states:
// rows are the (2S_1/2, 2P_1/2, 2P_3/2) components of S_1/2, P_1/2, P_3/2.
struct AdmixtureTriples {
  Eigen::Vector3d a;  // coupled S_1/2 state
  Eigen::Vector3d b;  // coupled P_1/2 state
  Eigen::Vector3d c;  // coupled P_3/2 state
};
AdmixtureTriples asymptotic_admixtures(double z_au, const Config& cfg);

// Squared P admixture of the coupled 2S state, Xi = (675/2)(1/F^2 + 1/(2 L^2))/Z^8.
double xi(double z_au, const AtomicConstants& c);

// Effective decay rate Gamma_2S + Gamma_2P * Xi.
double gamma_eff(double z_au, const AtomicConstants& c);

DecayProfile decay_profile(double z_au, const AtomicConstants& c);

// Distance where gamma_eff = 2 Gamma_2S, by bisection to 1e-9 relative.
double doubling_distance(const AtomicConstants& c);

// Distances where a configurable interaction measure equals the Lamb shift
// and the fine structure.
enum class CommensurabilityMeasure {
  kDiagonalDifferenceSP12,  // |<S|V|S> - <P12|V|P12>| = 1/Z^3 at leading order
  kDiagonalS,               // |<S|V|S>| = 3.5/Z^3
  kOffdiagSP12              // |<P12|V|S>| = 7.5 sqrt(3)/Z^4
};

struct CommensurabilityResult {
  std::string measure;
  double z_lamb_shift;
  double z_fine_structure;
};

CommensurabilityResult commensurability_distances(CommensurabilityMeasure m,
                                                  const Config& cfg);

// Validity window of the closed asymptotic formulas (admixtures, Xi).
bool in_asymptotic_window(double z_au, const AtomicConstants& c);

}  // namespace qedwall::statics

#endif
