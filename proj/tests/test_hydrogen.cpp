// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "qedwall/hydrogen.hpp"
#include "qedwall/oracle.hpp"

using namespace qedwall;
using namespace qedwall::hydrogen;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// closed-form radial integral oracle: expand R_nl as polynomial x exp(-r/n)
// with exact factorial coefficients and integrate term by term.  The
// alternating sum loses ~17 digits for diffuse n = 6 states, so it runs in
// quad precision.
double radial_integral_closed(int n1, int l1, int n2, int l2, int k) {
  using quad = __float128;
  auto factorial = [](int n) {
    quad f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto ipow = [](quad base, int e) {
    quad p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
  };
  // R_nl(r) = norm * sum_j c_j (2r/n)^(l+j) exp(-r/n), Laguerre expansion
  auto coeffs = [&](int n, int l) {
    std::vector<quad> c(n - l);
    const int nr = n - l - 1, a = 2 * l + 1;
    for (int j = 0; j <= nr; ++j)
      c[j] = (j % 2 ? quad(-1) : quad(1)) * factorial(nr + a) /
             (factorial(nr - j) * factorial(a + j) * factorial(j));
    return c;
  };
  const double norm1 =
      std::sqrt(std::pow(2.0 / n1, 3) * double(factorial(n1 - l1 - 1)) /
                (2.0 * n1 * double(factorial(n1 + l1))));
  const double norm2 =
      std::sqrt(std::pow(2.0 / n2, 3) * double(factorial(n2 - l2 - 1)) /
                (2.0 * n2 * double(factorial(n2 + l2))));
  const auto c1 = coeffs(n1, l1);
  const auto c2 = coeffs(n2, l2);
  const quad b = quad(1) / n1 + quad(1) / n2;  // exponent
  quad sum = 0;
  for (size_t i = 0; i < c1.size(); ++i)
    for (size_t j = 0; j < c2.size(); ++j) {
      const int e1 = l1 + static_cast<int>(i);
      const int e2 = l2 + static_cast<int>(j);
      const int p = e1 + e2 + k + 2;
      sum += c1[i] * c2[j] * ipow(quad(2) / n1, e1) * ipow(quad(2) / n2, e2) *
             factorial(p) / ipow(b, p + 1);
    }
  return norm1 * norm2 * double(sum);
}

}  // namespace

TEST_CASE("radial wavefunctions: known values") {
  CHECK(radial_wavefunction(1, 0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(radial_wavefunction(2, 0, 2.0)) < 1e-12);  // node at r = 2
  CHECK(rel(radial_integral(2, 1, 2, 1, 0), 1.0) < 1e-10);  // normalization
  CHECK_THROWS_AS(radial_wavefunction(2, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(radial_wavefunction(0, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(radial_wavefunction(2, 0, -1.0), std::domain_error);
}

TEST_CASE("radial integrals against the closed-form oracle") {
  CHECK(rel(std::abs(radial_integral(2, 0, 2, 1, 1)), 3.0 * std::sqrt(3.0)) < 1e-9);
  CHECK(rel(radial_integral(2, 1, 2, 1, 1), 5.0) < 1e-9);
  CHECK(rel(radial_integral(2, 0, 2, 0, 2), 42.0) < 1e-9);
  for (int n1 : {1, 2, 3, 6})
    for (int n2 : {2, 4, 5})
      for (int k : {1, 2, 3}) {
        const int l1 = n1 > 1 ? 1 : 0;
        const int l2 = 0;
        const double closed = radial_integral_closed(n1, l1, n2, l2, k);
        CHECK(std::abs(radial_integral(n1, l1, n2, l2, k) - closed) <
              1e-11 * (1.0 + std::abs(closed)));
      }
}

TEST_CASE("Clebsch-Gordan coefficients: known values and completeness") {
  // |1/2 1/2> x |1/2 -1/2> -> |0 0> and |1 0>
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, -1, 1, 1, 0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  // p x spin spinor weights
  CHECK(clebsch_gordan(2, 0, 1, 1, 3, 1) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(2, 0, 1, 1, 1, 1) == doctest::Approx(-std::sqrt(1.0 / 3.0)));
  // completeness sum over (m1, m2) for fixed (J, M)
  for (int two_J : {1, 3}) {
    double sum = 0.0;
    for (int two_m1 = -2; two_m1 <= 2; two_m1 += 2)
      for (int two_ms = -1; two_ms <= 1; two_ms += 2)
        sum += std::pow(clebsch_gordan(2, two_m1, 1, two_ms, two_J, 1), 2);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("dipole channels: 2S reference, n_max = 2") {
  Config cfg;
  const auto ch = dipole_channels({2, LevelLabel::S12}, 2, cfg);
  REQUIRE(ch.size() == 2);
  CHECK(ch[0].label == "2P1/2");
  CHECK(ch[1].label == "2P3/2");
  // the default-ladder denominators, exactly
  CHECK(ch[0].gap == -cfg.constants.lamb_shift);
  CHECK(ch[1].gap == cfg.constants.fine_structure);
  // full 2S -> 2P dipole strength 27 and its angular split
  double total = 0.0;
  for (const auto& c : ch) {
    CHECK(c.d_par_sq >= 0.0);
    CHECK(c.d_z_sq >= 0.0);
    total += c.d_par_sq + c.d_z_sq;
  }
  CHECK(std::abs(total - 27.0) < 1e-9);
  CHECK(std::abs(ch[0].d_par_sq - 6.0) < 1e-9);
  CHECK(std::abs(ch[0].d_z_sq - 3.0) < 1e-9);
  CHECK(std::abs(ch[1].d_par_sq - 12.0) < 1e-9);
  CHECK(std::abs(ch[1].d_z_sq - 6.0) < 1e-9);
  CHECK_THROWS_AS(dipole_channels({2, LevelLabel::S12}, 1, cfg), std::domain_error);
}

TEST_CASE("dipole channels: angular split against the 3D quadrature oracle") {
  Config cfg;
  const auto bra = make_spinor(2, LevelLabel::S12, 1);
  const auto x_op = [](double x, double, double) { return std::complex<double>(x, 0.0); };
  const auto y_op = [](double, double y, double) { return std::complex<double>(y, 0.0); };
  const auto z_op = [](double, double, double z) { return std::complex<double>(z, 0.0); };
  double dpar = 0.0, dz = 0.0;
  for (int two_mu : {-1, 1}) {  // 2P1/2 level
    const auto q = make_spinor(2, LevelLabel::P12, two_mu);
    dpar += std::norm(oracle::spinor_element_quadrature(bra, x_op, q)) +
            std::norm(oracle::spinor_element_quadrature(bra, y_op, q));
    dz += std::norm(oracle::spinor_element_quadrature(bra, z_op, q));
  }
  CHECK(std::abs(dpar - 6.0) < 1e-9);
  CHECK(std::abs(dz - 3.0) < 1e-9);
}

TEST_CASE("dipole channels: basis completeness for P references") {
  Config cfg;
  const auto p12 = dipole_channels({2, LevelLabel::P12}, 2, cfg);
  REQUIRE(p12.size() == 1);
  CHECK(p12[0].label == "2S1/2");
  CHECK(p12[0].gap == cfg.constants.lamb_shift);
  const auto p32 = dipole_channels({2, LevelLabel::P32}, 2, cfg);
  REQUIRE(p32.size() == 1);
  CHECK(p32[0].label == "2S1/2");
  CHECK(p32[0].gap == -cfg.constants.fine_structure);

  // alternative bookkeeping: the 2S -> 2P3/2 gap becomes F - L
  Config alt = cfg;
  alt.gap_convention = GapConvention::kFineOnly;
  const auto ch = dipole_channels({2, LevelLabel::S12}, 2, alt);
  CHECK(ch[1].gap ==
        doctest::Approx(cfg.constants.fine_structure - cfg.constants.lamb_shift)
            .epsilon(1e-12));
}

TEST_CASE("dipole sum rule: monotone partial sums below <r^2>") {
  Config cfg;
  double prev = 0.0;
  for (int nmax = 2; nmax <= 6; ++nmax) {
    const auto ch = dipole_channels({2, LevelLabel::S12}, nmax, cfg);
    double sum = 0.0;
    for (const auto& c : ch) sum += c.d_par_sq + c.d_z_sq;
    CHECK(sum > prev);
    CHECK(sum < 42.0);
    prev = sum;
  }
}

TEST_CASE("mixing channels: structure and parity rules") {
  Config cfg;
  CHECK_THROWS_AS(mixing_channels(LevelLabel::P12, LevelLabel::P32, 2, cfg),
                  std::domain_error);
  CHECK_THROWS_AS(mixing_channels(LevelLabel::S12, LevelLabel::S12, 2, cfg),
                  std::domain_error);
  CHECK_THROWS_AS(mixing_channels(LevelLabel::P12, LevelLabel::S12, 1, cfg),
                  std::domain_error);

  const auto ch = mixing_channels(LevelLabel::P12, LevelLabel::S12, 2, cfg);
  REQUIRE(ch.size() == 2);
  bool has_nonzero = false;
  for (const auto& c : ch) {
    CHECK(c.t1 == doctest::Approx(c.p_zq2 + c.p_zq2_rev).epsilon(1e-14));
    CHECK(c.t2 ==
          doctest::Approx(c.t1 - 2.0 * (c.p_rparz + c.p_rparz_rev)).epsilon(1e-14));
    if (std::abs(c.t2) > 1.0) has_nonzero = true;
  }
  CHECK(has_nonzero);

  // the virtual 2P1/2 products all vanish: parity kills the direct ordering
  // and the spherically symmetric 2P1/2 density kills the reversed one
  const auto& p12 = ch[0];
  REQUIRE(p12.label == "2P1/2");
  const double scale = std::abs(ch[1].p_zq2_rev) + std::abs(ch[1].p_rparz_rev);
  CHECK(std::abs(p12.p_zq2) < 1e-14 * scale);
  CHECK(std::abs(p12.p_rparz) < 1e-14 * scale);
  CHECK(std::abs(p12.p_zq2_rev) < 1e-14 * scale);
  CHECK(std::abs(p12.p_rparz_rev) < 1e-14 * scale);
  CHECK(p12.t1 == 0.0);
  CHECK(p12.t2 == 0.0);

  // q = 2P3/2 carries the whole n=2 contribution, with known closed values
  const auto& p32 = ch[1];
  REQUIRE(p32.label == "2P3/2");
  CHECK(rel(p32.p_zq2_rev, -24.0 * std::sqrt(3.0)) < 1e-10);
  CHECK(rel(p32.p_rparz_rev, 12.0 * std::sqrt(3.0)) < 1e-10);
  CHECK(std::abs(p32.p_zq2) < 1e-12);
  CHECK(std::abs(p32.p_rparz) < 1e-12);
}

TEST_CASE("mixing channels: products against the 3D quadrature oracle") {
  Config cfg;
  const auto ch = mixing_channels(LevelLabel::P32, LevelLabel::S12, 2, cfg);
  const auto bm = make_spinor(2, LevelLabel::P32, 1);
  const auto bn = make_spinor(2, LevelLabel::S12, 1);
  const auto quad = [](double x, double y, double z) {
    return std::complex<double>(x * x + y * y - 2.0 * z * z, 0.0);
  };
  const auto zf = [](double, double, double z) { return std::complex<double>(z, 0.0); };
  const auto xz = [](double x, double, double z) { return std::complex<double>(x * z, 0.0); };
  const auto yz = [](double, double y, double z) { return std::complex<double>(y * z, 0.0); };
  const auto xf = [](double x, double, double) { return std::complex<double>(x, 0.0); };
  const auto yf = [](double, double y, double) { return std::complex<double>(y, 0.0); };

  for (const auto& c : ch) {
    if (c.label != "2P1/2" && c.label != "2P3/2") continue;
    const LevelLabel ql = level_from_string(c.label);
    double pz_rev = 0.0, pr_rev = 0.0;
    std::complex<double> t1_acc(0, 0), t2_acc(0, 0);
    const int two_jq = ql == LevelLabel::P32 ? 3 : 1;
    for (int two_mu = -two_jq; two_mu <= two_jq; two_mu += 2) {
      const auto q = make_spinor(2, ql, two_mu);
      const auto a = oracle::spinor_element_quadrature(bm, quad, q) *
                     oracle::spinor_element_quadrature(q, zf, bn);
      const auto b = oracle::spinor_element_quadrature(bm, xz, q) *
                         oracle::spinor_element_quadrature(q, xf, bn) +
                     oracle::spinor_element_quadrature(bm, yz, q) *
                         oracle::spinor_element_quadrature(q, yf, bn);
      pz_rev += a.real();
      pr_rev += b.real();
      CHECK(std::abs(a.imag()) < 1e-10);
      CHECK(std::abs(b.imag()) < 1e-10);
      t1_acc += a;
      t2_acc += a - 2.0 * b;
    }
    CHECK(std::abs(c.p_zq2_rev - pz_rev) < 1e-8 * (1.0 + std::abs(pz_rev)));
    CHECK(std::abs(c.p_rparz_rev - pr_rev) < 1e-8 * (1.0 + std::abs(pr_rev)));
    CHECK(std::abs(c.t1 - t1_acc.real()) < 1e-8 * (1.0 + std::abs(c.t1)));
    CHECK(std::abs(c.t2 - t2_acc.real()) < 1e-8 * (1.0 + std::abs(c.t2)));
  }
}

TEST_CASE("matrix elements are invariant under a wavefunction phase flip") {
  const auto q0 = make_spinor(2, LevelLabel::P32, 1);
  auto q1 = q0;
  for (auto& comp : q1.components) comp.coeff = -comp.coeff;
  const auto bra = make_spinor(2, LevelLabel::S12, 1);
  const auto zf = [](double, double, double z) { return std::complex<double>(z, 0.0); };
  const auto quad = [](double x, double y, double z) {
    return std::complex<double>(x * x + y * y - 2.0 * z * z, 0.0);
  };
  const auto a0 = oracle::spinor_element_quadrature(bra, zf, q0) *
                  oracle::spinor_element_quadrature(q0, quad, bra);
  const auto a1 = oracle::spinor_element_quadrature(bra, zf, q1) *
                  oracle::spinor_element_quadrature(q1, quad, bra);
  CHECK(std::abs((a0 - a1).real()) < 1e-12 * std::abs(a0.real()));
  CHECK(std::norm(oracle::spinor_element_quadrature(bra, zf, q0)) ==
        doctest::Approx(std::norm(oracle::spinor_element_quadrature(bra, zf, q1))));
}

TEST_CASE("tensor-operator engine against the 3D quadrature oracle") {
  struct Case {
    TensorOperator op;
    std::function<std::complex<double>(double, double, double)> fn;
  };
  const std::vector<Case> cases = {
      {ops::z(), [](double, double, double z) { return std::complex<double>(z, 0); }},
      {ops::x(), [](double x, double, double) { return std::complex<double>(x, 0); }},
      {ops::y(), [](double, double y, double) { return std::complex<double>(y, 0); }},
      {ops::quad(),
       [](double x, double y, double z) {
         return std::complex<double>(x * x + y * y - 2 * z * z, 0);
       }},
      {ops::xz(), [](double x, double, double z) { return std::complex<double>(x * z, 0); }},
      {ops::yz(), [](double, double y, double z) { return std::complex<double>(y * z, 0); }},
      {ops::z_w(),
       [](double x, double y, double z) {
         return std::complex<double>(z * (x * x + y * y + 2 * z * z), 0);
       }},
  };
  const auto s1 = make_spinor(2, LevelLabel::P12, 1);
  const auto s2 = make_spinor(2, LevelLabel::P32, -1);
  const auto s3 = make_spinor(2, LevelLabel::S12, 1);
  const auto s4 = make_spinor(3, 2, 3, 1);  // 3D3/2
  for (const auto& c : cases) {
    for (const auto* bra : {&s1, &s2, &s3, &s4}) {
      for (const auto* ket : {&s1, &s3, &s4}) {
        const auto fast = matrix_element(*bra, c.op, *ket);
        const auto slow = oracle::spinor_element_quadrature(*bra, c.fn, *ket);
        CHECK(std::abs(fast - slow) < 1e-9 * (1.0 + std::abs(slow)));
      }
    }
  }
}

TEST_CASE("static polarizabilities") {
  Config cfg;
  SUBCASE("ground state: parallel equals transverse equals Pi(0)") {
    const auto p = static_polarizabilities({1, LevelLabel::S12}, 2, cfg);
    CHECK(rel(p.pi_par, p.pi_perp) < 1e-12);
    CHECK(rel(p.pi_of_omega(0.0), p.pi_par) < 1e-12);
  }
  SUBCASE("ground state: monotone bound-state partial sums below the total") {
    double prev = 0.0;
    for (int nmax = 2; nmax <= 6; ++nmax) {
      const auto p = static_polarizabilities({1, LevelLabel::S12}, nmax, cfg);
      CHECK(p.pi_par > prev);
      CHECK(p.pi_par < 4.5);  // full static polarizability, continuum included
      prev = p.pi_par;
    }
  }
  SUBCASE("2S: dominated by the downward Lamb-shift channel") {
    const auto p = static_polarizabilities({2, LevelLabel::S12}, 2, cfg);
    const double expected_par = 6.0 / (-cfg.constants.lamb_shift) +
                                12.0 / cfg.constants.fine_structure;
    const double expected_perp = 2.0 * (3.0 / (-cfg.constants.lamb_shift) +
                                        6.0 / cfg.constants.fine_structure);
    CHECK(rel(p.pi_par, expected_par) < 1e-12);
    CHECK(rel(p.pi_perp, expected_perp) < 1e-12);
    CHECK(p.pi_par < 0.0);
  }
  SUBCASE("pole guard") {
    const auto p = static_polarizabilities({2, LevelLabel::S12}, 2, cfg);
    CHECK_THROWS_AS(p.pi_of_omega(cfg.constants.lamb_shift), std::domain_error);
  }
}
