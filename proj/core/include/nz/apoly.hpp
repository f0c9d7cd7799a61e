#ifndef NZ_APOLY_HPP
#define NZ_APOLY_HPP

#include <cstddef>
#include <string>

#include "nz/multipoly.hpp"
#include "nz/potential.hpp"
#include "nz/saddle.hpp"

namespace nz {

struct APolynomial {
  MultiPoly poly;  // in (l, m), content-free, square-free, shifted
  bool canonical = false;
  // Set when the longitude only constrains ell^2 and the result is
  // reported in that substituted form.
  bool lambda_form = false;
};

struct PropertyReport {
  bool integer_coefficients = false;
  bool even_m_powers = false;
  bool inversion_symmetric = false;  // l -> 1/l, m -> 1/m up to a monomial
  bool corner_coefficients_unit = false;  // Newton-polygon corners are +-1
  std::string details;
};

// Eliminates all shape variables from the cleared system by iterated
// resultants, then canonicalizes.  Throws NoLongitudeVariable when the
// longitude component is missing and SwellLimit when an intermediate
// polynomial exceeds the term budget.
APolynomial eliminate(const GluingSystem& sys,
                      std::size_t term_budget = 2000000);

// Content and repeated factors removed, factors free of l divided out,
// exponents shifted so the minimal l and m powers are zero, sign fixed so
// the graded-lex leading coefficient is positive.
APolynomial canonicalize(const MultiPoly& p);

// The checklist for A-polynomial shape.
PropertyReport verify_properties(const APolynomial& a);

// Continues the geometric solution to `samples` points on the disc
// |u| <= 0.1 and returns the maximum relative residual of the matrix
// polynomial at (ell, m), taking the better meridian orientation.
double zero_locus_check(const NewtonMatrix& matrix, const GluingSystem& sys,
                        int samples, const SolveOptions& opts = {});

}  // namespace nz

#endif  // NZ_APOLY_HPP
