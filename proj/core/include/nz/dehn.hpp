#ifndef NZ_DEHN_HPP
#define NZ_DEHN_HPP

#include "nz/potential.hpp"
#include "nz/saddle.hpp"

namespace nz {

// Result of a (p, q) hyperbolic Dehn filling.  u and v are the meridian and
// longitude deformation parameters on the branch that vanishes at the
// complete structure; they satisfy p*u + q*v = pi*i.  (r, s) completes
// (p, q) to an SL(2, Z) matrix with p*s - q*r = 1.
struct FillingResult {
  int p = 0;
  int q = 0;
  int r = 0;
  int s = 0;
  cplx u{0.0};
  cplx v{0.0};
  double core_length = 0.0;   // length of the core geodesic, >= 0
  double core_torsion = 0.0;  // in (-pi, pi]
  double filled_volume = 0.0;
};

// Length and torsion of the core geodesic from -2*(r*u + s*v) mod 2*pi*i,
// cross-checked against -(2/pi) * Im(u * conj(v)).  Throws
// InconsistentFrame when the two disagree beyond 1e-6.
std::pair<double, double> core_geometry(cplx u, cplx v, int r, int s);

// Solves the gluing equations together with the surgery constraint
// p*u + q*v = pi*i by continuation from the complete structure, scaling the
// right side from 0 to pi*i.  The filled volume combines the accumulated
// potential with the core length.  Throws NotCoprime when gcd(p, q) != 1
// and PathCollision when the continuation loses the solution branch.
FillingResult dehn_fill(const GluingSystem& sys, int p, int q,
                        const SolveOptions& opts = {});

}  // namespace nz

#endif  // NZ_DEHN_HPP
