#include "nz/dehn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "nz/errors.hpp"
#include "numeric_detail.hpp"

namespace nz {

namespace {

const double kPi = std::acos(-1.0);
const double kTol = 1e-12;

// (r, s) with p*s - q*r = 1 and |r| minimal (ties toward smaller |s|).
std::pair<int, int> frame_completion(int p, int q) {
  if (p == 0) return {-q, 0};  // q is +-1 here; -q * r = 1 at s = 0
  // Extended Euclid: a*p + b*q = 1, so s = a, r = -b.
  long a = 1, b = 0, a1 = 0, b1 = 1;
  long x = p, y = q;
  while (y != 0) {
    long t = x / y;
    std::swap(x -= t * y, y);
    std::swap(a -= t * a1, a1);
    std::swap(b -= t * b1, b1);
  }
  long s = a * (x > 0 ? 1 : -1);
  long r = -b * (x > 0 ? 1 : -1);
  // The family (r + k*p, s + k*q) preserves the determinant.
  long k0 = std::lround(static_cast<double>(-r) / p);
  long best_r = 0, best_s = 0;
  bool have = false;
  for (long k = k0 - 1; k <= k0 + 1; ++k) {
    long rk = r + k * p, sk = s + k * q;
    if (!have || std::pair(std::abs(rk), std::abs(sk)) <
                     std::pair(std::abs(best_r), std::abs(best_s))) {
      best_r = rk;
      best_s = sk;
      have = true;
    }
  }
  return {static_cast<int>(best_r), static_cast<int>(best_s)};
}

// Newton on (x, u) for {gluing equations, p*u + q*v(x, u) = target}, with
// v tracked on the branch continuous from v = 0 at the complete structure.
// v2 holds 2*v and is updated in place.
bool newton_augmented(const GluingSystem& sys,
                      const detail::CompiledSystem& compiled,
                      const std::vector<std::vector<detail::CompiledPoly>>&
                          d_du,
                      int p, int q, cplx target, std::vector<cplx>& x,
                      cplx& u, cplx& v2) {
  std::size_t n = x.size();
  std::vector<cplx> values(n + 1);
  std::vector<cplx> f(n);
  std::vector<cplx> xt = x;
  cplx ut = u;
  cplx v2t = v2;
  for (int iter = 0; iter < 40; ++iter) {
    cplx m = std::exp(ut);
    for (std::size_t j = 0; j < n; ++j) values[j] = xt[j];
    values[n] = m;
    double rel = compiled.residuals(values, &f);
    v2t = detail::two_v(sys, xt, m, v2t - cplx(0.0, 2.0 * kPi)) +
          cplx(0.0, 2.0 * kPi);
    cplx g = static_cast<double>(p) * ut + 0.5 * static_cast<double>(q) * v2t -
             target;
    if (rel < kTol && std::abs(g) < kTol) {
      x = xt;
      u = ut;
      v2 = v2t;
      return true;
    }
    std::vector<std::vector<cplx>> jac(n + 1, std::vector<cplx>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        jac[i][j] = compiled.jacobian[i][j].eval(values);
      jac[i][n] = d_du[i][0].eval(values);
    }
    std::vector<cplx> grad = detail::two_v_gradient(sys, xt, m);
    for (std::size_t j = 0; j < n; ++j)
      jac[n][j] = 0.5 * static_cast<double>(q) * grad[j];
    jac[n][n] = static_cast<double>(p) +
                0.5 * static_cast<double>(q) * grad[n];
    std::vector<cplx> step(n + 1);
    for (std::size_t i = 0; i < n; ++i) step[i] = -f[i];
    step[n] = -g;
    if (!detail::solve_linear(jac, step)) return false;
    double biggest = 0.0;
    for (const auto& s : step) biggest = std::max(biggest, std::abs(s));
    if (biggest > 1.0)
      for (auto& s : step) s *= 1.0 / biggest;
    for (std::size_t j = 0; j < n; ++j) {
      xt[j] *= std::exp(step[j]);
      double a = std::abs(xt[j]);
      if (!(a > 1e-12) || a > 1e12) return false;
    }
    ut += step[n];
  }
  return false;
}

}  // namespace

std::pair<double, double> core_geometry(cplx u, cplx v, int r, int s) {
  cplx lambda = -2.0 * (static_cast<double>(r) * u +
                        static_cast<double>(s) * v);
  double length = lambda.real();
  double check = -(2.0 / kPi) * (u * std::conj(v)).imag();
  if (std::abs(length - check) > 1e-6)
    throw InconsistentFrame("core_geometry: length " + std::to_string(length) +
                            " disagrees with -(2/pi) Im(u conj(v)) = " +
                            std::to_string(check));
  if (length < 0.0 && length > -1e-9) length = 0.0;
  double torsion = std::remainder(lambda.imag(), 2.0 * kPi);
  if (torsion <= -kPi) torsion += 2.0 * kPi;
  return {length, torsion};
}

FillingResult dehn_fill(const GluingSystem& sys, int p, int q,
                        const SolveOptions& opts) {
  if (std::gcd(p, q) != 1)
    throw NotCoprime("dehn_fill: (" + std::to_string(p) + ", " +
                     std::to_string(q) + ") is not a coprime pair");

  SaddleSolution geo = geometric_solution(solve_complete(sys, opts));
  double complete_volume = geo.volume;

  detail::CompiledSystem compiled(sys);
  std::vector<std::string> order = sys.vars;
  order.push_back("m");
  std::vector<std::vector<detail::CompiledPoly>> d_du;
  for (const auto& eq : sys.equations) {
    MultiPoly d = MultiPoly::variable("m") * eq.derivative("m");
    d_du.push_back({detail::CompiledPoly::from(d, order)});
  }

  std::vector<cplx> x = geo.x;
  cplx u(0.0);
  cplx v2(0.0);  // 2v on the branch vanishing at the complete structure
  cplx phi(0.0);  // Phi(u) - Phi(0) = integral of 2v du on that branch
  double t = 0.0;
  double dt = 0.125;
  while (t < 1.0 - 1e-15) {
    int halvings = 0;
    for (;;) {
      double t_next = std::min(1.0, t + dt);
      cplx target = cplx(0.0, kPi) * t_next;
      std::vector<cplx> x_trial = x;
      cplx u_trial = u;
      cplx v2_trial = v2;
      if (newton_augmented(sys, compiled, d_du, p, q, target, x_trial,
                           u_trial, v2_trial)) {
        phi += 0.5 * (v2 + v2_trial) * (u_trial - u);
        x = std::move(x_trial);
        u = u_trial;
        v2 = v2_trial;
        t = t_next;
        if (halvings == 0 && dt < 0.125) dt *= 2.0;
        break;
      }
      dt *= 0.5;
      if (++halvings > 10)
        throw PathCollision("dehn_fill: Newton lost the branch near t = " +
                            std::to_string(t + dt));
    }
  }

  FillingResult out;
  out.p = p;
  out.q = q;
  auto [r, s] = frame_completion(p, q);
  out.r = r;
  out.s = s;
  out.u = u;
  out.v = 0.5 * v2;
  auto [length, torsion] = core_geometry(out.u, out.v, r, s);
  out.core_length = length;
  out.core_torsion = torsion;
  cplx change = cplx(0.0, -0.25) * (phi - 4.0 * out.u * out.v);
  out.filled_volume =
      complete_volume + change.real() - 0.5 * kPi * length;
  return out;
}

}  // namespace nz
