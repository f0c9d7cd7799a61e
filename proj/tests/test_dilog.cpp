#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nz/complexfn.hpp"

using nz::cplx;
constexpr double kPi = std::numbers::pi;

namespace {

cplx random_upper_half(std::mt19937& rng) {
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.05, 2.0);
  return {re(rng), im(rng)};
}

}  // namespace

TEST_CASE("li2 basics") {
  CHECK(std::abs(nz::li2(0.0)) == 0.0);

  // Direct series oracle at |z| < 1.
  cplx series = 0.0;
  for (int n = 200; n >= 1; --n)
    series += std::pow(cplx(0.3), n) / static_cast<double>(n * n);
  CHECK(std::abs(nz::li2(0.3) - series) < 1e-13);

  // Inversion relation for Li_2(-e^x).
  cplx r = nz::li2(-std::exp(cplx(0.7))) + nz::li2(-std::exp(cplx(-0.7))) +
           0.7 * 0.7 / 2.0 + kPi * kPi / 6.0;
  CHECK(std::abs(r) < 1e-12);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    cplx x(u(rng) * 3.0, u(rng) * 3.0);
    if (std::abs(x.imag()) >= kPi - 0.05) continue;
    cplx res = nz::li2(-std::exp(x)) + nz::li2(-std::exp(-x)) + x * x / 2.0 +
               kPi * kPi / 6.0;
    CHECK(std::abs(res) < 1e-11);
  }
}

TEST_CASE("rogers dilogarithm") {
  CHECK_THROWS_AS(nz::rogers_l(0.0), nz::DomainError);
  CHECK_THROWS_AS(nz::rogers_l(1.0), nz::DomainError);
  CHECK(std::isfinite(std::abs(nz::rogers_l(cplx(0.5, 0.5)))));

  cplx expected = nz::li2(0.5) + 0.5 * std::log(0.5) * std::log(0.5);
  CHECK(std::abs(nz::rogers_l(0.5) - expected) < 1e-14);

  // Pentagon identity on real 0 < w < z < 1.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 50; ++i) {
    double a = u(rng), b = u(rng);
    double z = std::max(a, b), w = std::min(a, b);
    if (z - w < 1e-3) continue;
    cplx sum = nz::rogers_l(z) - nz::rogers_l(w) + nz::rogers_l(w / z) -
               nz::rogers_l((1.0 - 1.0 / z) / (1.0 - 1.0 / w)) +
               nz::rogers_l((1.0 - z) / (1.0 - w));
    CHECK(std::abs(sum - kPi * kPi / 6.0) < 1e-10);
  }
}

TEST_CASE("bloch-wigner function") {
  CHECK(nz::bloch_wigner(0.37) == 0.0);
  CHECK_THROWS_AS(nz::bloch_wigner(1.0), nz::DomainError);

  // Twice D at the figure-eight modulus is the figure-eight volume.
  double vol = 2.0 * nz::bloch_wigner(cplx(0.5, std::sqrt(3.0) / 2.0));
  CHECK(std::abs(vol - 2.02988) < 1e-5);

  std::mt19937 rng(3);
  for (int i = 0; i < 1000; ++i) {
    cplx z = random_upper_half(rng);
    CHECK(std::abs(nz::bloch_wigner(std::conj(z)) + nz::bloch_wigner(z)) <
          1e-12);
    CHECK(std::abs(nz::bloch_wigner(1.0 / z) + nz::bloch_wigner(z)) < 1e-12);
  }

  // Pentagon identity at random upper-half-plane pairs.
  for (int i = 0; i < 100; ++i) {
    cplx z = random_upper_half(rng), w = random_upper_half(rng);
    double sum = nz::bloch_wigner(z) - nz::bloch_wigner(w) +
                 nz::bloch_wigner(w / z) -
                 nz::bloch_wigner((1.0 - 1.0 / z) / (1.0 - 1.0 / w)) +
                 nz::bloch_wigner((1.0 - z) / (1.0 - w));
    CHECK(std::abs(sum) < 1e-10);
  }
}

TEST_CASE("lobachevsky function and tetrahedron decomposition") {
  CHECK(nz::lobachevsky(0.0) == 0.0);

  // Direct series oracle.
  double theta = 0.4;
  double series = 0.0;
  for (int n = 1; n <= 2000000; ++n)
    series += 0.5 * std::sin(2.0 * n * theta) / (static_cast<double>(n) * n);
  CHECK(std::abs(nz::lobachevsky(theta) - series) < 1e-7);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    double t = u(rng);
    CHECK(std::abs(nz::lobachevsky(t + kPi) - nz::lobachevsky(t)) < 1e-12);
    CHECK(std::abs(nz::lobachevsky(-t) + nz::lobachevsky(t)) < 1e-12);
  }

  // D(z) decomposes into Lobachevsky values of the dihedral angles, and the
  // modulus triple multiplies to -1.
  for (int i = 0; i < 100; ++i) {
    cplx z1 = random_upper_half(rng);
    cplx z2 = 1.0 - 1.0 / z1;
    cplx z3 = 1.0 / (1.0 - z1);
    CHECK(std::abs(z1 * z2 * z3 + 1.0) < 1e-12);
    double sum = nz::lobachevsky(std::arg(z1)) + nz::lobachevsky(std::arg(z2)) +
                 nz::lobachevsky(std::arg(z3));
    CHECK(std::abs(nz::bloch_wigner(z1) - sum) < 1e-10);
  }
}

TEST_CASE("quantum dilogarithm identities") {
  nz::QDilogParams p3{0.3, 1e-10};
  cplx phi(0.5, 0.2);

  // Inversion relation.
  cplx lhs = nz::phi_gamma(p3, phi) * nz::phi_gamma(p3, -phi);
  cplx rhs = std::exp(-(phi * phi / 2.0 + (kPi * kPi + 0.3 * 0.3) / 6.0) /
                      cplx(0.0, 2.0 * 0.3));
  CHECK(std::abs(lhs - rhs) < 1e-8);

  // Duality between gamma and pi^2/gamma.
  nz::QDilogParams p7{0.7, 1e-10};
  nz::QDilogParams pdual{kPi * kPi / 0.7, 1e-10};
  CHECK(std::abs(nz::phi_gamma(pdual, 0.4) -
                 nz::phi_gamma(p7, 0.7 * 0.4 / kPi)) < 1e-8);

  // Difference equations.
  nz::QDilogParams p4{0.4, 1e-11};
  cplx f = 0.3;
  cplx ratio = nz::phi_gamma(p4, f + cplx(0.0, 0.4)) /
               nz::phi_gamma(p4, f - cplx(0.0, 0.4));
  CHECK(std::abs(ratio - 1.0 / (1.0 + std::exp(f))) < 1e-8);
  ratio = nz::phi_gamma(p4, f + cplx(0.0, kPi)) /
          nz::phi_gamma(p4, f - cplx(0.0, kPi));
  CHECK(std::abs(ratio - 1.0 / (1.0 + std::exp(kPi / 0.4 * f))) < 1e-8);

  // Inversion pins Phi(0)^2.
  cplx phi0 = nz::phi_gamma(p3, 0.0);
  cplx expect0 =
      std::exp(-((kPi * kPi + 0.3 * 0.3) / 6.0) / cplx(0.0, 2.0 * 0.3));
  CHECK(std::abs(phi0 * phi0 - expect0) < 1e-8);

  // Zero/pole lattice is rejected.
  CHECK_THROWS_AS(nz::phi_gamma(p3, cplx(0.0, 0.3 + kPi)), nz::PoleHit);
}

TEST_CASE("quantum dilogarithm classical limit") {
  auto errs = nz::phi_gamma_classical_err({0.2, 0.1, 0.05}, 0.3);
  REQUIRE(errs.size() == 3);
  CHECK(errs[0] > errs[1]);
  CHECK(errs[1] > errs[2]);
  CHECK(errs[1] / errs[0] <= 0.6);

  auto at_zero = nz::phi_gamma_classical_err({0.2, 0.1}, 0.0);
  CHECK(std::isfinite(at_zero[0]));
  CHECK(at_zero[1] < at_zero[0]);
}
