// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/statics.hpp"

#include <algorithm>
#include <cmath>

#include "qedwall/oracle.hpp"

namespace qedwall::statics {

namespace {

using hydrogen::LevelLabel;
using hydrogen::make_spinor;
using hydrogen::matrix_element;
using hydrogen::TensorOperator;

// multipole operators O_m with V = sum_m O_m / Z^m, in r^k cos^p form
TensorOperator multipole_operator(int m) {
  using hydrogen::ops::costheta_poly;
  switch (m) {
    case 3:
      return costheta_poly(2, {-1.0 / 16.0, 0.0, -1.0 / 16.0});
    case 4:
      return costheta_poly(3, {0.0, 3.0 / 32.0, 0.0, 3.0 / 32.0});
    case 5:
      return costheta_poly(
          4, {3.0 / 256.0, 0.0, -30.0 / 256.0, 0.0, -29.0 / 256.0});
    case 6:
      return costheta_poly(
          5, {0.0, -15.0 / 512.0, 0.0, 70.0 / 512.0, 0.0, 65.0 / 512.0});
  }
  throw std::domain_error("multipole_operator: order must be 3..6");
}

const std::array<LevelLabel, 3> kBasis = {LevelLabel::S12, LevelLabel::P12,
                                          LevelLabel::P32};

// z-independent 3x3 coefficient matrices of O_m in the coupled basis
const Eigen::Matrix3d& multipole_coefficients(int m) {
  static const std::array<Eigen::Matrix3d, 4> tables = [] {
    std::array<Eigen::Matrix3d, 4> t;
    for (int m = 3; m <= 6; ++m) {
      const auto op = multipole_operator(m);
      Eigen::Matrix3d w;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const auto bi = make_spinor(2, kBasis[i], 1);
          const auto bj = make_spinor(2, kBasis[j], 1);
          w(i, j) = matrix_element(bi, op, bj).real();
        }
      t[m - 3] = 0.5 * (w + w.transpose());  // symmetrize roundoff
    }
    return t;
  }();
  if (m < 3 || m > 6) throw std::domain_error("multipole_coefficients: order");
  return tables[m - 3];
}

Eigen::Vector3d free_diagonal(const Config& cfg) {
  const auto& c = cfg.constants;
  const double e_p32 = cfg.gap_convention == GapConvention::kLambPlusFine
                           ? c.lamb_shift + c.fine_structure
                           : c.fine_structure;
  return {c.lamb_shift, 0.0, e_p32};
}

OutOfRegimeError window_error(double z_au) {
  return OutOfRegimeError("statics: z = " + std::to_string(z_au) +
                          " outside the asymptotic-admixture window");
}

}  // namespace

double mirror_potential_exact(double x, double y, double z, double z_wall_au) {
  if (!(z_wall_au > 0.0))
    throw std::domain_error("mirror_potential_exact: need Z > 0");
  if (!(z > -z_wall_au))
    throw std::domain_error("mirror_potential_exact: electron at or below wall");
  const double zm = z + 2.0 * z_wall_au;
  const double r_mirror = std::sqrt(x * x + y * y + zm * zm);
  return 0.5 * (-0.5 / (z + z_wall_au) + 2.0 / r_mirror - 0.5 / z_wall_au);
}

double mirror_potential_multipole(double x, double y, double z,
                                  double z_wall_au, int order) {
  if (order < 3 || order > 6)
    throw std::domain_error("mirror_potential_multipole: order must be 3..6");
  const double r2 = x * x + y * y + z * z;
  const double rpar2_2z2 = x * x + y * y + 2.0 * z * z;
  double v = 0.0;
  const double zi = 1.0 / z_wall_au;
  if (order >= 3) v += -rpar2_2z2 / 16.0 * std::pow(zi, 3);
  if (order >= 4) v += 3.0 * z * rpar2_2z2 / 32.0 * std::pow(zi, 4);
  if (order >= 5)
    v += (3.0 * r2 * r2 - 30.0 * z * z * r2 - 29.0 * std::pow(z, 4)) / 256.0 *
         std::pow(zi, 5);
  if (order >= 6)
    v += (65.0 * std::pow(z, 5) + 70.0 * std::pow(z, 3) * r2 -
          15.0 * z * r2 * r2) /
         512.0 * std::pow(zi, 6);
  return v;
}

Eigen::Matrix3d multipole_matrix(double z_au, int order, const Config& cfg) {
  if (!(z_au > 0.0)) throw std::domain_error("multipole_matrix: need Z > 0");
  if (order < 3 || order > 6)
    throw std::domain_error("multipole_matrix: order must be 3..6");
  Eigen::Matrix3d h = free_diagonal(cfg).asDiagonal();
  for (int m = 3; m <= order; ++m)
    h += multipole_coefficients(m) * std::pow(z_au, -m);
  return h;
}

Eigen::Matrix3d exact_matrix(double z_au, const Config& cfg) {
  if (!(z_au > 0.0)) throw std::domain_error("exact_matrix: need Z > 0");
  Eigen::Matrix3d h = free_diagonal(cfg).asDiagonal();
  Eigen::Matrix3d w;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const auto bi = make_spinor(2, kBasis[i], 1);
      const auto bj = make_spinor(2, kBasis[j], 1);
      const auto v = oracle::spinor_element_quadrature(
          bi,
          [&](double x, double y, double z) {
            return std::complex<double>(
                mirror_potential_exact(x, y, z, z_au), 0.0);
          },
          bj);
      w(i, j) = v.real();
      w(j, i) = v.real();
    }
  return h + w;
}

std::vector<std::array<CoupledState, 3>> adiabatic_spectrum(
    const std::vector<double>& z_grid, const Config& cfg, int order) {
  if (z_grid.size() < 1)
    throw std::domain_error("adiabatic_spectrum: empty grid");
  bool ascending = true, descending = true;
  for (size_t i = 1; i < z_grid.size(); ++i) {
    ascending &= z_grid[i] > z_grid[i - 1];
    descending &= z_grid[i] < z_grid[i - 1];
  }
  if (!(ascending || descending))
    throw std::domain_error("adiabatic_spectrum: grid must be strictly monotone");
  for (double z : z_grid)
    if (!(z > 20.0))
      throw std::domain_error("adiabatic_spectrum: need z > 20");

  // walk from the largest distance downward
  std::vector<size_t> order_idx(z_grid.size());
  for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  if (ascending) std::reverse(order_idx.begin(), order_idx.end());

  std::vector<std::array<CoupledState, 3>> result(z_grid.size());
  Eigen::Matrix3d prev_vecs;  // columns = tracked branch vectors
  for (size_t step = 0; step < order_idx.size(); ++step) {
    const size_t gi = order_idx[step];
    const double z = z_grid[gi];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
        multipole_matrix(z, order, cfg));
    const Eigen::Matrix3d vecs = solver.eigenvectors();
    const Eigen::Vector3d vals = solver.eigenvalues();

    std::array<int, 3> pick{-1, -1, -1};  // branch -> eigenvector column
    if (step == 0) {
      // free-space limit: branch = dominant basis component
      std::array<bool, 3> used{false, false, false};
      for (int b = 0; b < 3; ++b) {
        int best = -1;
        double best_w = -1.0;
        for (int col = 0; col < 3; ++col) {
          if (used[col]) continue;
          const double w = std::abs(vecs(b, col));
          if (w > best_w) {
            best_w = w;
            best = col;
          }
        }
        pick[b] = best;
        used[best] = true;
      }
    } else {
      std::array<bool, 3> used{false, false, false};
      for (int b = 0; b < 3; ++b) {
        double best_w = -1.0, second_w = -1.0;
        int best = -1;
        for (int col = 0; col < 3; ++col) {
          if (used[col]) continue;
          const double w = std::abs(prev_vecs.col(b).dot(vecs.col(col)));
          if (w > best_w) {
            second_w = best_w;
            best_w = w;
            best = col;
          } else if (w > second_w) {
            second_w = w;
          }
        }
        if (second_w >= 0.0 && best_w - second_w < 1e-6)
          throw TrackingError(
              "adiabatic_spectrum: ambiguous branch overlap at z = " +
              std::to_string(z));
        pick[b] = best;
        used[best] = true;
      }
    }

    Eigen::Matrix3d tracked;
    for (int b = 0; b < 3; ++b) {
      Eigen::Vector3d v = vecs.col(pick[b]);
      if (step > 0 && prev_vecs.col(b).dot(v) < 0.0) v = -v;
      if (step == 0 && v(b) < 0.0) v = -v;
      tracked.col(b) = v;
      result[gi][b] = CoupledState{v, vals(pick[b]), kBasis[b]};
    }
    prev_vecs = tracked;
  }
  return result;
}

bool in_asymptotic_window(double z_au, const AtomicConstants& c) {
  const double lower =
      4.0 * std::pow(std::min(c.lamb_shift, c.fine_structure), -0.25);
  const double upper = 0.25 / c.fine_structure;
  return z_au >= lower && z_au <= upper;
}

AdmixtureTriples asymptotic_admixtures(double z_au, const Config& cfg) {
  const auto& c = cfg.constants;
  if (!in_asymptotic_window(z_au, c))
    throw window_error(z_au);
  const double z3 = std::pow(z_au, 3), z4 = z3 * z_au;
  const double s34 = std::sqrt(3.0) / 2.0;     // sqrt(3/4)
  const double s32 = std::sqrt(1.5);           // sqrt(3/2)
  const double inv2s2 = 1.0 / (2.0 * std::sqrt(2.0));
  AdmixtureTriples t;
  t.a = {1.0, s34 * 15.0 / (c.lamb_shift * z4), s32 * 15.0 / (c.fine_structure * z4)};
  t.b = {-s34 * 15.0 / (c.lamb_shift * z4), 1.0, inv2s2 / (c.fine_structure * z3)};
  t.c = {-s32 * 15.0 / (c.fine_structure * z4),
         inv2s2 / ((c.lamb_shift + c.fine_structure) * z3), 1.0};
  return t;
}

double xi(double z_au, const AtomicConstants& c) {
  if (!in_asymptotic_window(z_au, c)) throw window_error(z_au);
  const double pref = 337.5 * (1.0 / (c.fine_structure * c.fine_structure) +
                               0.5 / (c.lamb_shift * c.lamb_shift));
  return pref / std::pow(z_au, 8);
}

double gamma_eff(double z_au, const AtomicConstants& c) {
  return c.gamma_2s + c.gamma_2p * xi(z_au, c);
}

DecayProfile decay_profile(double z_au, const AtomicConstants& c) {
  return {z_au, xi(z_au, c), gamma_eff(z_au, c)};
}

double doubling_distance(const AtomicConstants& c) {
  // gamma_eff is strictly decreasing; bracket then bisect
  double lo = 300.0, hi = 5000.0;
  const auto excess = [&](double z) { return gamma_eff(z, c) - 2.0 * c.gamma_2s; };
  if (!(excess(lo) > 0.0) || !(excess(hi) < 0.0))
    throw std::runtime_error("doubling_distance: bracket failure");
  while ((hi - lo) > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CommensurabilityResult commensurability_distances(CommensurabilityMeasure m,
                                                  const Config& cfg) {
  const auto& c = cfg.constants;
  double coeff = 0.0;
  int power = 0;
  std::string name;
  const auto& w3 = multipole_coefficients(3);
  const auto& w4 = multipole_coefficients(4);
  switch (m) {
    case CommensurabilityMeasure::kDiagonalDifferenceSP12:
      coeff = std::abs(w3(0, 0) - w3(1, 1));
      power = 3;
      name = "diagonal_difference_s_p12";
      break;
    case CommensurabilityMeasure::kDiagonalS:
      coeff = std::abs(w3(0, 0));
      power = 3;
      name = "diagonal_s";
      break;
    case CommensurabilityMeasure::kOffdiagSP12:
      coeff = std::abs(w4(0, 1));
      power = 4;
      name = "offdiag_s_p12";
      break;
  }
  const auto solve = [&](double target) {
    // coeff / z^power = target, monotone; bisection for robustness
    double lo = 1.0, hi = 1e6;
    const auto f = [&](double z) { return coeff * std::pow(z, -power) - target; };
    if (!(f(lo) > 0.0) || !(f(hi) < 0.0))
      throw std::runtime_error(
          "commensurability_distances: no root in bracket for measure " + name);
    for (int i = 0; i < 200; ++i) {
      const double mid = std::sqrt(lo * hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
      if (hi - lo < 1e-9 * hi) break;
    }
    return 0.5 * (lo + hi);
  };
  return {name, solve(c.lamb_shift), solve(c.fine_structure)};
}

}  // namespace qedwall::statics
