#ifndef NZ_COMPLEXFN_HPP
#define NZ_COMPLEXFN_HPP

#include <complex>
#include <vector>

#include "nz/errors.hpp"

namespace nz {

using cplx = std::complex<double>;

// Parameters for the quantum dilogarithm quadrature.
struct QDilogParams {
  double gamma = 0.0;       // deformation parameter, > 0
  double abs_tol = 1e-10;   // absolute quadrature target, in (0, 1e-6]
  int max_panels = 1 << 20; // refinement cap for the adaptive trapezoid
};

// Principal-branch Euler dilogarithm Li_2(z), cut on [1, inf) evaluated as
// the limit from above.  Relative accuracy ~1e-13 off the cut.
cplx li2(cplx z);

// Rogers dilogarithm L(z) = Li_2(z) + (1/2) log z log(1-z).
// Throws DomainError at z in {0, 1}.
cplx rogers_l(cplx z);

// Bloch-Wigner function D(z) = Im Li_2(z) + arg(1-z) log|z|.  Single valued
// and continuous across the Li_2 cut; vanishes on the real line.
// Throws DomainError at z in {0, 1}.
double bloch_wigner(cplx z);

// Lobachevsky function: (1/2) sum_{n>=1} sin(2 n theta)/n^2, odd and
// pi-periodic.
double lobachevsky(double theta);

// Faddeev quantum dilogarithm Phi_gamma(phi) by contour quadrature on
// R + i delta; arguments outside the strip |Im phi| < pi + gamma are reduced
// into it with the difference equations.  Throws QuadratureFailure when the
// tolerance is unreachable within max_panels and PoleHit when phi lies on
// the zero/pole lattice -+ i((2a+1) gamma + (2b+1) pi).
cplx phi_gamma(const QDilogParams& params, cplx phi);

// Classical-limit check: err(gamma) = |2 i gamma log Phi_gamma(phi)
// - Li_2(-e^phi)| per gamma, in the order given.
std::vector<double> phi_gamma_classical_err(const std::vector<double>& gammas,
                                            cplx phi);

}  // namespace nz

#endif  // NZ_COMPLEXFN_HPP
