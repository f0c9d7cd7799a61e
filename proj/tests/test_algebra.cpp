#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nz/expression.hpp"
#include "nz/multipoly.hpp"

using nz::BigInt;
using nz::MultiPoly;

namespace {

// The figure-eight A-polynomial: -m^4 + l(1 - m^2 - 2m^4 - m^6 + m^8)
// - l^2 m^4.
MultiPoly a41() {
  return nz::parse_poly(
      "-m^4 + l*(1 - m^2 - 2*m^4 - m^6 + m^8) - l^2*m^4");
}

MultiPoly random_poly(std::mt19937& rng, int nterms, int maxdeg) {
  std::uniform_int_distribution<int> d(0, maxdeg), c(-5, 5);
  MultiPoly p;
  for (int i = 0; i < nterms; ++i) {
    BigInt coeff = c(rng);
    if (coeff == 0) coeff = 1;
    p = p + MultiPoly::monomial({"x", "m"}, {d(rng), d(rng)}, coeff);
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  MultiPoly zero;
  MultiPoly l = MultiPoly::variable("l");
  MultiPoly m = MultiPoly::variable("m");
  CHECK(((l + m) * zero).is_zero());

  // (1 - m^2 x)(1 - x) expansion, term-by-term oracle.
  MultiPoly x = MultiPoly::variable("x");
  MultiPoly prod = (MultiPoly::constant(1) - m * m * x) *
                   (MultiPoly::constant(1) - x);
  MultiPoly expect = MultiPoly::constant(1) - x - m * m * x +
                     m * m * x * x;
  CHECK(prod == expect);

  // Assemble the figure-eight A-polynomial from monomials.
  MultiPoly assembled =
      MultiPoly::monomial({"l", "m"}, {0, 4}, -1) +
      MultiPoly::monomial({"l", "m"}, {1, 0}, 1) +
      MultiPoly::monomial({"l", "m"}, {1, 2}, -1) +
      MultiPoly::monomial({"l", "m"}, {1, 4}, -2) +
      MultiPoly::monomial({"l", "m"}, {1, 6}, -1) +
      MultiPoly::monomial({"l", "m"}, {1, 8}, 1) +
      MultiPoly::monomial({"l", "m"}, {2, 4}, -1);
  CHECK(assembled == a41());
}

TEST_CASE("text round trip") {
  MultiPoly p = a41();
  CHECK(nz::parse_poly(p.str()) == p);
  MultiPoly q = nz::parse_poly("(m^2*y-1)*(y-1)-m^2*(m^2*x-y)");
  CHECK(nz::parse_poly(q.str()) == q);
  CHECK_THROWS_AS(nz::parse_poly("x + * y"), nz::ParseError);
  CHECK_THROWS_AS(nz::parse_poly("(x"), nz::ParseError);
}

TEST_CASE("resultants") {
  MultiPoly x = MultiPoly::variable("x");
  MultiPoly m = MultiPoly::variable("m");

  // 3x3 Sylvester determinant oracle: res(x^2 - m, x - 1) = 1 - m.
  MultiPoly r = nz::resultant(x * x - m, x - MultiPoly::constant(1), "x");
  CHECK(r == MultiPoly::constant(1) - m);

  // Common factor (x - m) forces a zero resultant.
  MultiPoly common = x - m;
  MultiPoly p = common * (x + MultiPoly::constant(2));
  MultiPoly q = common * (x * x + m);
  CHECK(nz::resultant(p, q, "x").is_zero());

  CHECK_THROWS_AS(nz::resultant(MultiPoly(), x, "x"), nz::DegenerateInput);

  // Sign symmetry res(p, q) = (-1)^{dp dq} res(q, p) on random instances.
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    MultiPoly a = random_poly(rng, 4, 3);
    MultiPoly b = random_poly(rng, 4, 3);
    if (a.degree("x") == 0 || b.degree("x") == 0) continue;
    MultiPoly rab = nz::resultant(a, b, "x");
    MultiPoly rba = nz::resultant(b, a, "x");
    if ((a.degree("x") * b.degree("x")) % 2 != 0) rba = -rba;
    CHECK(rab == rba);
  }

  // The figure-eight system: eliminating x from the cleared saddle and
  // longitude equations leaves a polynomial divisible by the A-polynomial.
  MultiPoly saddle = nz::parse_poly("m^2*(1-x)*(1-m^2*x)+x");
  MultiPoly longitude = nz::parse_poly("l*m^2*x*(m^2*x-1)-1");
  MultiPoly elim = nz::resultant(saddle, longitude, "x");
  CHECK(!elim.is_zero());
  MultiPoly g = nz::poly_gcd(elim, a41());
  CHECK((g == a41() || g == -a41()));
}

TEST_CASE("gcd and squarefree") {
  MultiPoly l = MultiPoly::variable("l");
  MultiPoly one = MultiPoly::constant(1);

  // 4 (l-1)^2 -> l - 1.
  MultiPoly sq = MultiPoly::constant(4) * (l - one) * (l - one);
  CHECK(nz::squarefree_and_content(sq) == l - one);

  // A squared monomial factor is stripped, recovering the A-polynomial.
  MultiPoly m = MultiPoly::variable("m");
  MultiPoly p = m * m * a41();
  MultiPoly sf = nz::squarefree_and_content(p);
  CHECK((sf == a41() || sf == -a41()));

  // Idempotence.
  MultiPoly once = nz::squarefree_and_content(a41());
  CHECK(nz::squarefree_and_content(once) == once);

  // gcd identifies a shared factor on random instances.
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    MultiPoly common = random_poly(rng, 3, 2);
    if (common.is_constant()) continue;
    MultiPoly a = common * random_poly(rng, 3, 2);
    MultiPoly b = common * random_poly(rng, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    MultiPoly g = nz::poly_gcd(a, b);
    // The common factor divides the gcd.
    CHECK_NOTHROW(a.divide_exact(g));
    CHECK_NOTHROW(b.divide_exact(g));
    MultiPoly reduced = common.divide_exact(
        MultiPoly::constant(common.content()));
    CHECK_NOTHROW(g.divide_exact(nz::poly_gcd(g, reduced)));
  }
}

TEST_CASE("newton matrix") {
  // Figure-eight matrix from the polynomial.
  nz::NewtonMatrix mat = nz::newton_matrix(a41());
  nz::NewtonMatrix expect;
  expect.rows = {{BigInt(0), BigInt(1), BigInt(0)},
                 {BigInt(0), BigInt(-1), BigInt(0)},
                 {BigInt(-1), BigInt(-2), BigInt(-1)},
                 {BigInt(0), BigInt(-1), BigInt(0)},
                 {BigInt(0), BigInt(1), BigInt(0)}};
  CHECK(mat == expect);

  CHECK(nz::newton_matrix(MultiPoly::constant(1)).rows ==
        std::vector<std::vector<BigInt>>{{BigInt(1)}});

  // Odd m-power rejected.
  CHECK_THROWS_AS(
      nz::newton_matrix(nz::parse_poly("l + m")),
      nz::MatrixConventionError);

  // Round trip through the matrix is the identity on a41.
  CHECK(nz::newton_matrix_to_poly(mat) == a41());

  // 180-degree rotation symmetry of the figure-eight matrix.
  auto rows = mat.rows;
  auto rot = rows;
  std::reverse(rot.begin(), rot.end());
  for (auto& row : rot) std::reverse(row.begin(), row.end());
  CHECK(rows == rot);
}
