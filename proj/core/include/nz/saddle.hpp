#ifndef NZ_SADDLE_HPP
#define NZ_SADDLE_HPP

#include <vector>

#include "nz/potential.hpp"

namespace nz {

struct SaddleSolution {
  std::vector<cplx> x;
  cplx m{1.0};
  cplx ell{-1.0};
  std::vector<cplx> moduli;
  double volume = 0.0;
  double residual = 0.0;  // max |cleared polynomial| at the solution
  bool geometric = false;
};

struct ContinuationPath {
  std::vector<cplx> u_samples;               // from 0 to u_target
  std::vector<SaddleSolution> solutions;     // one per sample
  std::vector<cplx> two_v_samples;           // branch-continuous 2v
  cplx phi_accumulated{0.0};                 // Phi(u) - Phi(0) = int 2v du
};

struct SolveOptions {
  int starts_per_var = 200;
  unsigned seed = 0;
  // Deterministic extra starts (e.g. printed catalog solutions).
  std::vector<std::vector<cplx>> extra_starts;
};

// Multi-start Newton on the cleared system at m = 1.  Roots are
// deduplicated at distance 1e-8, conjugate partners are added, and roots
// with a degenerate modulus (0 or 1) are discarded.  Throws NoConvergence
// when nothing survives.
std::vector<SaddleSolution> solve_complete(const GluingSystem& sys,
                                           const SolveOptions& opts = {});

// The root maximizing the signed sum of Bloch-Wigner values of the moduli;
// returned copy is tagged geometric.
SaddleSolution geometric_solution(const std::vector<SaddleSolution>& roots);

// Signed Bloch-Wigner volume over tetra_moduli; branch-safe.
double volume_at(const SaddleSolution& sol, const PotentialExpression& V);

// Path-continues the complete geometric solution to u_target with adaptive
// step halving, tracking a continuous branch of 2v from 2v(0) = -2 pi i and
// accumulating Phi(u) - Phi(0) by the trapezoid rule.  Throws PathCollision
// after 10 consecutive halvings fail.
ContinuationPath continue_solution(const GluingSystem& sys,
                                   const SaddleSolution& start, cplx u_target,
                                   int min_steps = 5);

// Coefficients c_0..c_order of 2v(u) = -2 pi i + c_1 u + c_3 u^3 + ... by
// power-series Newton at the complete solution.  order must be <= 9.
std::vector<cplx> taylor_v(const GluingSystem& sys, int order,
                           const SolveOptions& opts = {});

}  // namespace nz

#endif  // NZ_SADDLE_HPP
