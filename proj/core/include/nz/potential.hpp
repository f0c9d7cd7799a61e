#ifndef NZ_POTENTIAL_HPP
#define NZ_POTENTIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "nz/multipoly.hpp"

namespace nz {

// Exponent vector over the ordered variables (x_1 .. x_n, m); m is always
// the last slot.
struct Monomial {
  std::vector<int> exps;
};

// The Neumann-Zagier potential: dilogarithms of monomials plus a rational
// bilinear form in the logs, with iota-pi linear terms kept separately.
struct PotentialExpression {
  std::vector<std::string> vars;  // shape variables, m excluded
  Rational const_pi2;             // coefficient of pi^2
  std::vector<std::pair<int, Monomial>> dilog_terms;  // (epsilon, argument)
  std::vector<std::vector<Rational>> bilinear;  // symmetric, over logs + u
  std::vector<Rational> linear_ipi;             // coefficients of i pi log X
  std::vector<std::pair<int, Monomial>> tetra_moduli;  // for volumes

  std::size_t n_vars() const { return vars.size(); }
};

// Exponentiated saddle conditions and longitude as cleared polynomials.
struct GluingSystem {
  std::vector<std::string> vars;       // shape variables
  std::vector<MultiPoly> equations;    // n cleared polynomials in vars + m
  MultiPoly longitude;                 // cleared polynomial in vars + m + l
  int sigma = 1;                       // sign on the ell monomial
  int ell_power = 1;                   // 1, or 2 when exponents halve oddly
  // Longitude exponent data for direct numeric evaluation of ell (or ell^2
  // when ell_power == 2): per dilog term the (1 - M) exponent, then per
  // variable (and m last) the monomial exponent.
  std::vector<int> ell_dilog_exps;
  std::vector<int> ell_monomial_exps;
  PotentialExpression potential;       // retained for moduli and volume
};

// Value of the argument monomial at (x, m).
cplx eval_monomial(const Monomial& monomial, const std::vector<cplx>& x,
                   cplx m);

// Principal-branch value of the potential.  Throws SingularArgument when a
// dilogarithm argument is 0 or 1.
cplx evaluate(const PotentialExpression& V, const std::vector<cplx>& x,
              cplx m);

// Analytic gradient in log variables: entries d/dlog x_i for each i, then
// d/dlog m (= d/du) last.
std::vector<cplx> gradient(const PotentialExpression& V,
                           const std::vector<cplx>& x, cplx m);

// Exponentiated gluing equations, cleared to polynomial form A - B with the
// positive-exponent factors in A.  Throws NonIntegerExponent when the
// bilinear form does not exponentiate to integer monomials.
GluingSystem gluing_equations(const PotentialExpression& V);

// Completes the longitude component of a system produced by
// gluing_equations.  The optional complete solution resolves the sign sigma
// numerically (ell(0) = -1 at the complete structure); without it sigma
// stays +1.
void longitude_equation(GluingSystem& sys,
                        const std::vector<cplx>* complete_solution = nullptr);

// Numeric longitude eigenvalue ell at a solution; for ell_power == 2 the
// two square roots are returned.
std::vector<cplx> ell_values(const GluingSystem& sys,
                             const std::vector<cplx>& x, cplx m);

}  // namespace nz

#endif  // NZ_POTENTIAL_HPP
