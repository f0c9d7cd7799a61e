#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "doctest.h"
#include "nz/catalog.hpp"
#include "nz/complexfn.hpp"
#include "nz/expression.hpp"
#include "nz/potential.hpp"

using nz::cplx;
using nz::MultiPoly;
using nz::PotentialExpression;

namespace {

const double kPi = std::acos(-1.0);

// Leading term of p as a single-term polynomial (largest exponent vector in
// graded lex order, with its coefficient).
MultiPoly leading_term(const MultiPoly& p) {
  REQUIRE(!p.is_zero());
  auto it = std::prev(p.terms().end());
  return MultiPoly::monomial(p.vars(), it->first, it->second);
}

// Two cleared equations describe the same zero locus when they agree up to
// a constant times a monomial: cross-multiplying by leading terms must give
// the identically-zero difference.
bool same_equation(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  MultiPoly diff = a * leading_term(b) - b * leading_term(a);
  return diff.is_zero();
}

std::map<std::string, cplx> value_map(const nz::GluingSystem& sys,
                                      const std::vector<cplx>& x, cplx m) {
  std::map<std::string, cplx> vals;
  for (std::size_t j = 0; j < sys.vars.size(); ++j) vals[sys.vars[j]] = x[j];
  vals["m"] = m;
  return vals;
}

double volume_from_moduli(const PotentialExpression& V,
                          const std::vector<cplx>& x, cplx m) {
  double vol = 0.0;
  for (const auto& [eps, mon] : V.tetra_moduli)
    vol += eps * nz::bloch_wigner(nz::eval_monomial(mon, x, m));
  return vol;
}

}  // namespace

TEST_CASE("figure-eight potential value and saddle") {
  const nz::CatalogEntry& entry = nz::get("4_1");
  cplx x0(0.5, std::sqrt(3.0) / 2.0);

  cplx value = nz::evaluate(entry.potential, {x0}, cplx(1.0));
  CHECK(value.imag() == doctest::Approx(2.02988).epsilon(1e-4));

  // The analytic gradient vanishes mod 2 pi i at the complete saddle.
  std::vector<cplx> grad = nz::gradient(entry.potential, {x0}, cplx(1.0));
  double frac = std::abs(std::remainder(grad[0].imag(), 2.0 * kPi));
  CHECK(std::abs(grad[0].real()) < 1e-9);
  CHECK(frac < 1e-9);

  CHECK_THROWS_AS(nz::evaluate(entry.potential, {cplx(1.0)}, cplx(1.0)),
                  nz::SingularArgument);
}

TEST_CASE("two-variable potential at the printed solution") {
  const nz::CatalogEntry& entry = nz::get("5_2");
  std::vector<cplx> sol = {cplx(-0.877439, 0.744862), cplx(0.78492, 1.30714)};
  cplx value = nz::evaluate(entry.potential, sol, cplx(1.0));
  CHECK(value.imag() == doctest::Approx(2.82812).epsilon(1e-4));
}

TEST_CASE("gradient of a pure constant is zero") {
  PotentialExpression V;
  V.vars = {"x"};
  V.const_pi2 = nz::Rational(1, 6);
  V.bilinear = {{0, 0}, {0, 0}};
  V.linear_ipi = {0, 0};
  std::vector<cplx> grad = nz::gradient(V, {cplx(2.0, 1.0)}, cplx(1.0));
  CHECK(std::abs(grad[0]) == 0.0);
  CHECK(std::abs(grad[1]) == 0.0);
}

TEST_CASE("analytic gradient against central differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> radius(0.3, 2.0), phase(0.0, 2 * kPi);
  const double h = 1e-6;
  for (const auto& entry : nz::load()) {
    const PotentialExpression& V = entry.potential;
    std::size_t n = V.n_vars();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<cplx> x(n);
      for (auto& xi : x) xi = std::polar(radius(rng), phase(rng));
      cplx m = std::polar(radius(rng), phase(rng));
      std::vector<cplx> grad;
      try {
        grad = nz::gradient(V, x, m);
      } catch (const nz::SingularArgument&) {
        continue;  // random point hit a singular modulus
      }
      // Central difference in the log variables: scale by e^{+-h}.
      for (std::size_t k = 0; k <= n; ++k) {
        auto shifted = [&](double step) {
          std::vector<cplx> xs = x;
          cplx ms = m;
          if (k < n)
            xs[k] *= std::exp(step);
          else
            ms *= std::exp(step);
          return nz::evaluate(V, xs, ms);
        };
        cplx fd = (shifted(h) - shifted(-h)) / (2.0 * h);
        CHECK(std::abs(grad[k] - fd) <= 1e-6 * (1.0 + std::abs(grad[k])));
      }
    }
  }
}

TEST_CASE("generated equations match the printed ones") {
  for (const auto& entry : nz::load()) {
    if (entry.printed_gluing.empty()) continue;
    INFO(entry.name);
    nz::GluingSystem sys = nz::gluing_equations(entry.potential);
    REQUIRE(entry.printed_gluing.size() == sys.equations.size());
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
      MultiPoly printed = nz::parse_poly(entry.printed_gluing[k]);
      CHECK(same_equation(sys.equations[k], printed));
    }
    if (entry.printed_longitude.empty()) continue;
    std::vector<cplx> sol = entry.solution_vector();
    nz::longitude_equation(sys, &sol);
    MultiPoly printed = nz::parse_poly(entry.printed_longitude);
    CHECK(same_equation(sys.longitude, printed));
  }
}

TEST_CASE("longitude eigenvalue is -1 at the complete structure") {
  for (const char* name : {"4_1", "5_2", "6_1", "7_2", "K5_1"}) {
    INFO(name);
    const nz::CatalogEntry& entry = nz::get(name);
    nz::GluingSystem sys = nz::gluing_equations(entry.potential);
    std::vector<cplx> sol = entry.solution_vector();
    nz::longitude_equation(sys, &sol);
    std::vector<cplx> ells = nz::ell_values(sys, sol, cplx(1.0));
    double best = 1e9;
    for (cplx ell : ells) best = std::min(best, std::abs(ell + cplx(1.0)));
    CHECK(best < 1e-3);

    // The cleared longitude polynomial vanishes at (sol, m=1, ell).
    auto vals = value_map(sys, sol, cplx(1.0));
    vals["l"] = cplx(-1.0);
    double resid = std::abs(sys.longitude.eval(vals)) /
                   sys.longitude.eval_magnitude(vals);
    CHECK(resid < 1e-3);
  }
}

TEST_CASE("imaginary part equals the moduli volume at saddles") {
  // Exact figure-eight saddle: agreement to full precision.
  const nz::CatalogEntry& e41 = nz::get("4_1");
  std::vector<cplx> x0 = {cplx(0.5, std::sqrt(3.0) / 2.0)};
  double im = nz::evaluate(e41.potential, x0, cplx(1.0)).imag();
  CHECK(std::abs(im - volume_from_moduli(e41.potential, x0, cplx(1.0))) <
        1e-8);

  // At |m| = 1 the exact correction is sum_k log|x_k| Im(grad_k); at a
  // saddle each grad_k is a multiple of 2 pi i, so the correction vanishes
  // precisely when the principal-branch gradient is zero.  Printed
  // solutions are 6-digit approximations, hence the matching tolerance.
  for (const auto& entry : nz::load()) {
    if (entry.printed_solution.empty()) continue;
    INFO(entry.name);
    std::vector<cplx> sol = entry.solution_vector();
    double lhs = nz::evaluate(entry.potential, sol, cplx(1.0)).imag();
    double rhs = volume_from_moduli(entry.potential, sol, cplx(1.0));
    std::vector<cplx> grad = nz::gradient(entry.potential, sol, cplx(1.0));
    double correction = 0.0;
    double grad_norm = 0.0;
    for (std::size_t k = 0; k < sol.size(); ++k) {
      correction += std::log(std::abs(sol[k])) * grad[k].imag();
      grad_norm = std::max(grad_norm,
                           std::abs(std::remainder(grad[k].imag(), 2 * kPi)));
      grad_norm = std::max(grad_norm, std::abs(grad[k].real()));
    }
    CHECK(grad_norm < 1e-3);  // printed points are saddles mod 2 pi i
    CHECK(std::abs(lhs - correction - rhs) < 1e-3);
    if (correction == 0.0) CHECK(std::abs(lhs - rhs) < 1e-3);
  }
}

TEST_CASE("non-integer exponents are rejected") {
  PotentialExpression V;
  V.vars = {"x"};
  V.const_pi2 = 0;
  nz::Monomial mon;
  mon.exps = {1, 0};
  V.dilog_terms = {{1, mon}};
  V.tetra_moduli = V.dilog_terms;
  V.bilinear = {{nz::Rational(1, 4), 0}, {0, 0}};
  V.linear_ipi = {0, 0};
  CHECK_THROWS_AS(nz::gluing_equations(V), nz::NonIntegerExponent);
}
