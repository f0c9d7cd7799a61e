#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "nz/apoly.hpp"
#include "nz/catalog.hpp"
#include "nz/expression.hpp"
#include "nz/potential.hpp"

using nz::APolynomial;
using nz::cplx;
using nz::GluingSystem;
using nz::MultiPoly;
using nz::NewtonMatrix;

namespace {

GluingSystem system_for(const std::string& name) {
  const nz::CatalogEntry& entry = nz::get(name);
  GluingSystem sys = nz::gluing_equations(entry.potential);
  if (!entry.printed_solution.empty()) {
    std::vector<cplx> sol = entry.solution_vector();
    nz::longitude_equation(sys, &sol);
  } else {
    nz::longitude_equation(sys);
  }
  return sys;
}

// The paper's matrix orientation is only pinned by one example, so
// comparisons allow row reversal, column reversal, both, and global sign.
bool matches_up_to_symmetry(const NewtonMatrix& got,
                            const NewtonMatrix& want) {
  auto rows = got.rows;
  for (int rowrev = 0; rowrev < 2; ++rowrev) {
    for (int colrev = 0; colrev < 2; ++colrev) {
      auto cand = rows;
      if (rowrev) std::reverse(cand.begin(), cand.end());
      if (colrev)
        for (auto& row : cand) std::reverse(row.begin(), row.end());
      if (cand == want.rows) return true;
      for (auto& row : cand)
        for (auto& x : row) x = -x;
      if (cand == want.rows) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("figure-eight elimination is exact") {
  APolynomial a = nz::eliminate(system_for("4_1"));
  CHECK(a.canonical);
  CHECK(a.poly == *nz::get("4_1").explicit_apoly);
}

TEST_CASE("two and three variable eliminations match printed matrices") {
  for (const char* name : {"5_2", "ptb_L2R"}) {
    INFO(name);
    APolynomial a = nz::eliminate(system_for(name));
    CHECK(matches_up_to_symmetry(nz::newton_matrix(a.poly),
                                 *nz::get(name).newton_matrix));
  }
}

TEST_CASE("longitude is required") {
  GluingSystem sys = nz::gluing_equations(nz::get("4_1").potential);
  CHECK_THROWS_AS(nz::eliminate(sys), nz::NoLongitudeVariable);
}

TEST_CASE("canonicalize") {
  MultiPoly a41 = *nz::get("4_1").explicit_apoly;
  MultiPoly m = MultiPoly::variable("m");

  CHECK(nz::canonicalize(m * m * a41).poly == a41);
  CHECK(nz::canonicalize(-a41).poly == a41);
  CHECK(nz::canonicalize(a41 * a41).poly == a41);

  // A factor free of l is divided out.
  MultiPoly onem = MultiPoly::constant(1) - m * m;
  CHECK(nz::canonicalize(onem * a41).poly == a41);

  // Idempotence.
  APolynomial once = nz::canonicalize(a41);
  CHECK(nz::canonicalize(once.poly).poly == once.poly);

  CHECK_THROWS_AS(nz::canonicalize(m * m - MultiPoly::constant(1)),
                  nz::NoLongitudeVariable);
  CHECK_THROWS_AS(nz::canonicalize(MultiPoly()), nz::NoLongitudeVariable);
}

TEST_CASE("property checklist") {
  APolynomial a41 = nz::canonicalize(*nz::get("4_1").explicit_apoly);
  nz::PropertyReport r = nz::verify_properties(a41);
  CHECK(r.integer_coefficients);
  CHECK(r.even_m_powers);
  CHECK(r.inversion_symmetric);
  CHECK(r.corner_coefficients_unit);

  APolynomial pretzel =
      nz::canonicalize(*nz::get("pretzel_-2_3_7").explicit_apoly);
  nz::PropertyReport rp = nz::verify_properties(pretzel);
  CHECK(rp.even_m_powers);
  CHECK(rp.corner_coefficients_unit);

  APolynomial odd;
  odd.poly = nz::parse_poly("l + m");
  odd.canonical = true;
  CHECK(!nz::verify_properties(odd).even_m_powers);
}

TEST_CASE("zero locus residuals") {
  GluingSystem sys41 = system_for("4_1");
  const NewtonMatrix& mat41 = *nz::get("4_1").newton_matrix;
  CHECK(nz::zero_locus_check(mat41, sys41, 8) < 1e-8);

  GluingSystem sys77 = system_for("7_7");
  nz::SolveOptions opts;
  opts.extra_starts.push_back(nz::get("7_7").solution_vector());
  CHECK(nz::zero_locus_check(*nz::get("7_7").newton_matrix, sys77, 5, opts) <
        1e-6);

  // Negative control: the wrong matrix is loudly rejected.
  GluingSystem sys52 = system_for("5_2");
  CHECK(nz::zero_locus_check(mat41, sys52, 5) > 1e-3);
}

TEST_CASE("eliminated polynomial vanishes along its own continuation") {
  for (const char* name : {"4_1", "5_2"}) {
    INFO(name);
    GluingSystem sys = system_for(name);
    APolynomial a = nz::eliminate(sys);
    CHECK(nz::zero_locus_check(nz::newton_matrix(a.poly), sys, 20) < 1e-8);
  }
}
