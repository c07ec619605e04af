// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef QEDWALL_HYDROGEN_HPP
#define QEDWALL_HYDROGEN_HPP

#include <complex>
#include <string>
#include <vector>

#include "qedwall/config.hpp"

namespace qedwall::hydrogen {

// The three n=2 fine-structure levels entering the coupled-state analysis,
// magnetic projection fixed to mu = +1/2.
enum class LevelLabel { S12, P12, P32 };

std::string to_string(LevelLabel);
LevelLabel level_from_string(const std::string&);  // throws on unknown label

// A reference state |n l j, mu=+1/2>.  n = 2 gives the fine-structure trio;
// n = 1 with S12 selects the ground state (used for polarizability checks).
struct RefState {
  int n = 2;
  LevelLabel fs = LevelLabel::S12;
};

// One virtual level's dipole strengths feeding the retarded energy shift.
// gap = E_q - E_ref; d_par_sq = sum_muq |<ref|r_par|q>|^2 (both in-plane
// components), d_z_sq = sum_muq |<ref|z|q>|^2.
struct VirtualChannel {
  double gap;
  double d_par_sq;
  double d_z_sq;
  std::string label;
};

// One virtual level's dipole-quadrupole products feeding the mixing term.
// Direct ordering keeps the dipole-type operator on the <m| side; the
// reversed products are the hermitian-conjugate partners.  t1/t2 are the
// full combinations including the conjugate addition:
//   t1 = p_zq2 + p_zq2_rev
//   t2 = t1 - 2 (p_rparz + p_rparz_rev)
struct MixingChannel {
  double gap;
  double p_zq2;        // <m|z|q><q|rpar^2 - 2 z^2|n>
  double p_rparz;      // <m|rpar|q> . <q|rpar z|n>
  double p_zq2_rev;    // <m|rpar^2 - 2 z^2|q><q|z|n>
  double p_rparz_rev;  // <m|rpar z|q> . <q|rpar|n>
  double t1;
  double t2;
  std::string label;
};

// Static polarizabilities with the symmetric +/- frequency sum carried out:
// pi_par = sum_q d_par_sq/gap, pi_perp = sum_q 2 d_z_sq/gap.
struct Polarizabilities {
  double pi_par = 0.0;
  double pi_perp = 0.0;
  std::vector<VirtualChannel> channels;

  // Dynamic polarizability (1/3) sum_q (d_par+d_z) [1/(gap+w) + 1/(gap-w)].
  double pi_of_omega(double omega) const;
};

// ---------------------------------------------------------------------------
// Wavefunctions and radial integrals

// Normalized radial function R_nl(r) in a.u.; int R^2 r^2 dr = 1.
double radial_wavefunction(int n, int l, double r);

// int_0^inf R_{n1 l1} r^k R_{n2 l2} r^2 dr by adaptive quadrature,
// relative accuracy 1e-12.
double radial_integral(int n1, int l1, int n2, int l2, int k);

// ---------------------------------------------------------------------------
// Angular-momentum algebra (Condon-Shortley phases)

// <j1 m1 j2 m2 | J M> with doubled arguments (two_j = 2j etc).
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M);

// int Y*_{l1 m1} Y_{L M} Y_{l2 m2} dOmega.
double gaunt(int l1, int m1, int L, int M, int l2, int m2);

// Schroedinger-Pauli spinor |n l j mu> expanded over |l m_l> x |s m_s>.
struct Spinor {
  int n, l, two_j, two_mu;
  struct Component {
    int m_l;
    int two_ms;  // +1 or -1
    double coeff;
  };
  std::vector<Component> components;
};

Spinor make_spinor(int n, int l, int two_j, int two_mu);
Spinor make_spinor(int n, LevelLabel fs, int two_mu);

// Multiplicative one-electron operator r^k * sum_i c_i Y_{L_i M_i}.
struct TensorOperator {
  int radial_power;
  struct Term {
    int L, M;
    std::complex<double> c;
  };
  std::vector<Term> terms;
};

namespace ops {
TensorOperator z();
TensorOperator x();
TensorOperator y();
TensorOperator r2();
TensorOperator z2();
TensorOperator rpar2();
TensorOperator quad();  // rpar^2 - 2 z^2
TensorOperator xz();
TensorOperator yz();
TensorOperator z_w();   // z (rpar^2 + 2 z^2)
// r^radial_power * sum_p coeffs[p] cos^p(theta); used by the multipole
// expansion of the mirror potential.
TensorOperator costheta_poly(int radial_power, const std::vector<double>& coeffs);
}  // namespace ops

// <bra|Op|ket> for spin-independent multiplicative operators.
std::complex<double> matrix_element(const Spinor& bra, const TensorOperator& op,
                                    const Spinor& ket);

// ---------------------------------------------------------------------------
// Level energies and channel tables

// Absolute level energy: -1/(2 n^2) for n != 2; for n = 2 the fine-structure
// ladder (P12 at -1/8, S12 at -1/8 + L, P32 per the gap convention).
double level_energy(int n, int l, int two_j, const Config& cfg);

// E_q - E_ref, exact within the n=2 manifold.
double energy_gap(int n_q, int l_q, int two_j_q, const RefState& ref,
                  const Config& cfg);

// Dipole-coupled virtual levels with principal quantum number <= n_max.
std::vector<VirtualChannel> dipole_channels(const RefState& ref, int n_max,
                                            const Config& cfg);

// Dipole-quadrupole product channels for the mixing pair (m, n); n is the
// reference state.  m and n must have opposite parity.
std::vector<MixingChannel> mixing_channels(LevelLabel m, LevelLabel n,
                                           int n_max, const Config& cfg);

Polarizabilities static_polarizabilities(const RefState& ref, int n_max,
                                         const Config& cfg);

}  // namespace qedwall::hydrogen

#endif
