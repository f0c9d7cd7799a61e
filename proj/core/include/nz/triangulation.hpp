#ifndef NZ_TRIANGULATION_HPP
#define NZ_TRIANGULATION_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nz/potential.hpp"

namespace nz {

// One oriented ideal tetrahedron with its face labels.  The modulus is
// z = e^{d - b} (second out-label minus second in-label) for both
// orientations.
struct TetraTerm {
  int epsilon = 1;  // +1 or -1
  std::array<int, 2> in_labels{};
  std::array<int, 2> out_labels{};
};

// Rational linear form over the labels set equal to u_coeff * u.
struct MeridianForm {
  std::map<int, Rational> coeffs;
  Rational u_coeff;
};

struct Triangulation {
  std::string name;
  std::vector<TetraTerm> terms;
  MeridianForm meridian;
  std::string notes;
};

// Affine map from each label to a rational combination of free variables
// and u.  Row j gives label labels[j] as sum over (x_1..x_n, u) of the
// row's coefficients.
struct LinearReduction {
  std::vector<int> labels;
  std::vector<std::string> var_names;  // free shape variables, u excluded
  std::vector<std::vector<Rational>> rows;  // |labels| x (n + 1)
  int pinned_label = -1;
};

// Checks the in/out matching rule, label arity, and that the meridian form
// references existing labels.  Throws GluingError or MeridianError.
void validate(const Triangulation& t);

// Solves the per-tetrahedron linear constraints together with the meridian
// form over the rationals.  The fully reduced parametrization has one free
// shape variable less than the tetrahedron count; any residual gauge
// freedom beyond that is fixed by pinning labels to zero (the requested
// label first, then lowest ids).  Throws RankError when the system is
// inconsistent or has no free variable left.
LinearReduction reduce(const Triangulation& t, int pin_label = -1);

// The potential in the reduction's free variables: one dilogarithm term per
// tetrahedron with the tetrahedron's sign, a rational bilinear form, and
// the tetrahedra moduli z = e^{d - b}.
PotentialExpression build_potential(const Triangulation& t,
                                    const LinearReduction& reduction);
PotentialExpression build_potential(const Triangulation& t);

// Once-punctured-torus bundle triangulation for a monodromy word over
// {L, R}.  Throws NotHyperbolic when the word uses only one letter, and
// DegenerateInput when it is empty or contains other characters.
Triangulation ptb_triangulation(const std::string& word);

}  // namespace nz

#endif  // NZ_TRIANGULATION_HPP
