#include "nz/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "numeric_detail.hpp"
#include "nz/complexfn.hpp"
#include "nz/errors.hpp"

namespace nz {

namespace detail {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool solve_linear(std::vector<std::vector<cplx>>& a, std::vector<cplx>& b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      cplx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t c = col + 1; c < n; ++c) b[col] -= a[col][c] * b[c];
    b[col] /= a[col][col];
  }
  return true;
}

CompiledSystem::CompiledSystem(const GluingSystem& sys) {
  order = sys.vars;
  order.push_back("m");
  for (const auto& eq : sys.equations) {
    equations.push_back(CompiledPoly::from(eq, order));
    std::vector<CompiledPoly> row;
    for (const auto& var : sys.vars) {
      MultiPoly d = MultiPoly::variable(var) * eq.derivative(var);
      row.push_back(CompiledPoly::from(d, order));
    }
    jacobian.push_back(std::move(row));
  }
}

double CompiledSystem::residuals(const std::vector<cplx>& values,
                                 std::vector<cplx>* f) const {
  if (f != nullptr) f->resize(equations.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    cplx v = equations[i].eval(values);
    if (f != nullptr) (*f)[i] = v;
    double mag = equations[i].magnitude(values);
    worst = std::max(worst, std::abs(v) / (1.0 + mag));
  }
  return worst;
}

bool CompiledSystem::newton(std::vector<cplx>& x, cplx m, double tol,
                            int max_iter) const {
  std::size_t nn = n();
  std::vector<cplx> values(nn + 1);
  std::vector<cplx> f(nn);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t j = 0; j < nn; ++j) values[j] = x[j];
    values[nn] = m;
    double rel = residuals(values, &f);
    if (rel < tol) return true;
    std::vector<std::vector<cplx>> jac(nn, std::vector<cplx>(nn));
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        jac[i][j] = jacobian[i][j].eval(values);
    std::vector<cplx> step = f;
    for (auto& s : step) s = -s;
    if (!solve_linear(jac, step)) return false;
    double biggest = 0.0;
    for (const auto& s : step) biggest = std::max(biggest, std::abs(s));
    if (biggest > 3.0)
      for (auto& s : step) s *= 3.0 / biggest;
    for (std::size_t j = 0; j < nn; ++j) {
      x[j] *= std::exp(step[j]);
      double a = std::abs(x[j]);
      if (!(a > 1e-12) || a > 1e12) return false;
    }
  }
  return false;
}

cplx two_v(const GluingSystem& sys, const std::vector<cplx>& x, cplx m,
           cplx near) {
  cplx raw = two_v_raw(sys, x, m);
  double k = std::round((near - raw).imag() / (2.0 * kPi));
  return raw + cplx(0.0, 2.0 * kPi * k);
}

cplx two_v_raw(const GluingSystem& sys, const std::vector<cplx>& x, cplx m) {
  const PotentialExpression& V = sys.potential;
  std::size_t n = V.n_vars();
  cplx total(0.0);
  for (const auto& [eps, mon] : V.dilog_terms) {
    int a = -eps * mon.exps[n];
    if (a != 0)
      total += static_cast<double>(a) *
               std::log(cplx(1.0) - eval_monomial(mon, x, m));
  }
  for (std::size_t j = 0; j < n; ++j)
    total += 2.0 * V.bilinear[n][j].get_d() * std::log(x[j]);
  total += 2.0 * V.bilinear[n][n].get_d() * std::log(m);
  total += V.linear_ipi[n].get_d() * cplx(0.0, kPi);
  return total;
}

std::vector<cplx> two_v_gradient(const GluingSystem& sys,
                                 const std::vector<cplx>& x, cplx m) {
  const PotentialExpression& V = sys.potential;
  std::size_t n = V.n_vars();
  std::vector<cplx> grad(n + 1, cplx(0.0));
  for (const auto& [eps, mon] : V.dilog_terms) {
    int a = -eps * mon.exps[n];
    if (a == 0) continue;
    cplx M = eval_monomial(mon, x, m);
    cplx factor = static_cast<double>(a) * (-M / (cplx(1.0) - M));
    for (std::size_t k = 0; k <= n; ++k)
      if (mon.exps[k] != 0)
        grad[k] += factor * static_cast<double>(mon.exps[k]);
  }
  for (std::size_t k = 0; k <= n; ++k) grad[k] += 2.0 * V.bilinear[n][k].get_d();
  return grad;
}

}  // namespace detail

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAcceptTol = 1e-10;

std::vector<cplx> moduli_values(const PotentialExpression& V,
                                const std::vector<cplx>& x, cplx m) {
  std::vector<cplx> out;
  for (const auto& [eps, mon] : V.tetra_moduli)
    out.push_back(eval_monomial(mon, x, m));
  return out;
}

bool degenerate_moduli(const std::vector<cplx>& moduli) {
  for (cplx z : moduli)
    if (std::abs(z) < 1e-8 || std::abs(z - cplx(1.0)) < 1e-8) return true;
  return false;
}

double moduli_volume(const PotentialExpression& V,
                     const std::vector<cplx>& moduli) {
  double vol = 0.0;
  for (std::size_t t = 0; t < moduli.size(); ++t)
    vol += V.tetra_moduli[t].first * bloch_wigner(moduli[t]);
  return vol;
}

SaddleSolution make_solution(const GluingSystem& sys,
                             const detail::CompiledSystem& compiled,
                             const std::vector<cplx>& x, cplx m) {
  SaddleSolution sol;
  sol.x = x;
  sol.m = m;
  sol.moduli = moduli_values(sys.potential, x, m);
  sol.volume = moduli_volume(sys.potential, sol.moduli);
  std::vector<cplx> values = x;
  values.push_back(m);
  std::vector<cplx> f;
  compiled.residuals(values, &f);
  sol.residual = 0.0;
  for (const auto& v : f) sol.residual = std::max(sol.residual, std::abs(v));
  sol.ell = std::exp(0.5 * detail::two_v(sys, x, m, cplx(0.0, -2.0 * kPi)));
  return sol;
}

}  // namespace

std::vector<SaddleSolution> solve_complete(const GluingSystem& sys,
                                           const SolveOptions& opts) {
  detail::CompiledSystem compiled(sys);
  std::size_t n = sys.vars.size();
  cplx m(1.0);

  std::vector<std::vector<cplx>> starts = opts.extra_starts;
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> logr(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  for (int s = 0; s < opts.starts_per_var * static_cast<int>(n); ++s) {
    std::vector<cplx> x(n);
    for (auto& xi : x) xi = std::polar(std::exp(logr(rng)), phase(rng));
    starts.push_back(std::move(x));
  }

  std::vector<std::vector<cplx>> roots;
  auto accept = [&](std::vector<cplx> x) {
    if (!compiled.newton(x, m, kAcceptTol, 80)) return;
    for (const auto& r : roots) {
      double dist = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        dist = std::max(dist, std::abs(r[j] - x[j]));
      if (dist < 1e-8) return;
    }
    roots.push_back(std::move(x));
  };
  for (const auto& start : starts) accept(start);
  // At m = 1 the system has real coefficients, so conjugates of roots are
  // roots; polishing them fills in basins the random starts missed.
  for (std::size_t i = 0, found = roots.size(); i < found; ++i) {
    std::vector<cplx> conj = roots[i];
    for (auto& c : conj) c = std::conj(c);
    accept(conj);
  }

  std::vector<SaddleSolution> out;
  for (const auto& r : roots) {
    if (degenerate_moduli(moduli_values(sys.potential, r, m))) continue;
    out.push_back(make_solution(sys, compiled, r, m));
  }
  if (out.empty())
    throw NoConvergence("solve_complete: no roots survived the start set");
  std::sort(out.begin(), out.end(),
            [](const SaddleSolution& a, const SaddleSolution& b) {
              if (a.volume != b.volume) return a.volume > b.volume;
              for (std::size_t j = 0; j < a.x.size(); ++j) {
                if (a.x[j].real() != b.x[j].real())
                  return a.x[j].real() < b.x[j].real();
                if (a.x[j].imag() != b.x[j].imag())
                  return a.x[j].imag() < b.x[j].imag();
              }
              return false;
            });
  return out;
}

SaddleSolution geometric_solution(const std::vector<SaddleSolution>& roots) {
  if (roots.empty())
    throw DegenerateInput("geometric_solution: empty root list");
  const SaddleSolution* best = &roots[0];
  for (const auto& root : roots)
    if (root.volume > best->volume) best = &root;
  SaddleSolution out = *best;
  out.geometric = true;
  return out;
}

double volume_at(const SaddleSolution& sol, const PotentialExpression& V) {
  std::vector<cplx> moduli = moduli_values(V, sol.x, sol.m);
  for (cplx z : moduli)
    if (std::abs(z) < 1e-12 || std::abs(z - cplx(1.0)) < 1e-12)
      throw SingularArgument("volume_at: degenerate tetrahedron modulus");
  return moduli_volume(V, moduli);
}

ContinuationPath continue_solution(const GluingSystem& sys,
                                   const SaddleSolution& start, cplx u_target,
                                   int min_steps) {
  detail::CompiledSystem compiled(sys);
  cplx u_from = std::log(start.m);

  ContinuationPath path;
  path.u_samples.push_back(u_from);
  std::vector<cplx> x = start.x;
  path.solutions.push_back(make_solution(sys, compiled, x, start.m));
  cplx v2 = detail::two_v(sys, x, start.m, cplx(0.0, -2.0 * kPi));
  if (std::abs(start.m - cplx(1.0)) > 1e-12)
    v2 = detail::two_v(sys, x, start.m, 2.0 * std::log(start.ell));
  path.two_v_samples.push_back(v2);
  path.solutions.back().ell = std::exp(0.5 * v2);

  cplx span = u_target - u_from;
  if (std::abs(span) == 0.0) return path;
  int steps = std::max(min_steps,
                       static_cast<int>(std::ceil(std::abs(span) / 0.02)));
  double t = 0.0;
  double dt = 1.0 / steps;
  cplx u_prev = u_from;
  while (t < 1.0 - 1e-15) {
    int halvings = 0;
    for (;;) {
      double t_next = std::min(1.0, t + dt);
      cplx u_next = u_from + t_next * span;
      std::vector<cplx> trial = x;
      if (compiled.newton(trial, std::exp(u_next), kAcceptTol, 40)) {
        x = std::move(trial);
        cplx m_next = std::exp(u_next);
        cplx v2_next = detail::two_v(sys, x, m_next, v2);
        path.phi_accumulated +=
            0.5 * (v2 + v2_next) * (u_next - u_prev);
        v2 = v2_next;
        u_prev = u_next;
        t = t_next;
        path.u_samples.push_back(u_next);
        path.two_v_samples.push_back(v2);
        SaddleSolution sol = make_solution(sys, compiled, x, m_next);
        sol.ell = std::exp(0.5 * v2);
        path.solutions.push_back(std::move(sol));
        if (halvings == 0 && dt < 1.0 / steps) dt *= 2.0;
        break;
      }
      dt *= 0.5;
      if (++halvings > 10)
        throw PathCollision("continue_solution: Newton failed after 10 "
                            "halvings near u = " +
                            std::to_string(u_next.real()) + "+" +
                            std::to_string(u_next.imag()) + "i");
    }
  }
  return path;
}

namespace {

// Truncated power series in u with complex coefficients.
using Jet = std::vector<cplx>;

Jet jet_const(cplx c, std::size_t len) {
  Jet j(len, cplx(0.0));
  j[0] = c;
  return j;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  std::size_t len = a.size();
  Jet out(len, cplx(0.0));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Jet jet_inv(const Jet& a) {
  std::size_t len = a.size();
  Jet out(len, cplx(0.0));
  out[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    cplx acc(0.0);
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

Jet jet_pow(const Jet& a, int e) {
  std::size_t len = a.size();
  Jet base = e >= 0 ? a : jet_inv(a);
  Jet acc = jet_const(cplx(1.0), len);
  for (int k = std::abs(e); k > 0; --k) acc = jet_mul(acc, base);
  return acc;
}

Jet jet_log(const Jet& a) {
  std::size_t len = a.size();
  Jet out(len, cplx(0.0));
  out[0] = std::log(a[0]);
  for (std::size_t k = 1; k < len; ++k) {
    cplx acc = a[k];
    for (std::size_t j = 1; j < k; ++j)
      acc -= (static_cast<double>(j) / k) * out[j] * a[k - j];
    out[k] = acc / a[0];
  }
  return out;
}

Jet jet_exp_u(std::size_t len) {
  Jet out(len, cplx(0.0));
  double fact = 1.0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) fact *= k;
    out[k] = 1.0 / fact;
  }
  return out;
}

Jet eval_poly_jet(const MultiPoly& p, const std::vector<Jet>& values,
                  const std::vector<std::string>& order, std::size_t len) {
  std::vector<int> where(p.vars().size(), -1);
  for (std::size_t j = 0; j < p.vars().size(); ++j)
    for (std::size_t k = 0; k < order.size(); ++k)
      if (order[k] == p.vars()[j]) where[j] = static_cast<int>(k);
  Jet total(len, cplx(0.0));
  for (const auto& [e, c] : p.terms()) {
    Jet term = jet_const(cplx(c.get_d()), len);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term = jet_mul(term, jet_pow(values[where[j]], e[j]));
    for (std::size_t k = 0; k < len; ++k) total[k] += term[k];
  }
  return total;
}

}  // namespace

std::vector<cplx> taylor_v(const GluingSystem& sys, int order,
                           const SolveOptions& opts) {
  if (order < 0 || order > 9)
    throw DegenerateInput("taylor_v: order must be between 0 and 9");
  std::size_t len = static_cast<std::size_t>(order) + 1;
  std::size_t n = sys.vars.size();

  SaddleSolution base = geometric_solution(solve_complete(sys, opts));

  std::vector<std::string> jet_order = sys.vars;
  jet_order.push_back("m");
  std::vector<Jet> values(n + 1);
  for (std::size_t j = 0; j < n; ++j) values[j] = jet_const(base.x[j], len);
  values[n] = jet_exp_u(len);

  // Plain-variable Jacobian at u = 0 for the order-by-order correction.
  std::vector<cplx> point = base.x;
  point.push_back(cplx(1.0));
  std::vector<std::vector<cplx>> jac0(n, std::vector<cplx>(n));
  std::vector<std::string> comp_order = jet_order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jac0[i][j] = detail::CompiledPoly::from(
                       sys.equations[i].derivative(sys.vars[j]), comp_order)
                       .eval(point);

  for (std::size_t k = 1; k < len; ++k) {
    std::vector<cplx> rhs(n);
    for (std::size_t i = 0; i < n; ++i)
      rhs[i] = -eval_poly_jet(sys.equations[i], values, jet_order, k + 1)[k];
    std::vector<std::vector<cplx>> jac = jac0;
    if (!detail::solve_linear(jac, rhs))
      throw NoConvergence("taylor_v: singular Jacobian at the base point");
    for (std::size_t j = 0; j < n; ++j) values[j][k] = rhs[j];
  }

  // 2v(u) as a series; the constant is fixed to -2 pi i by convention.
  const PotentialExpression& V = sys.potential;
  Jet total(len, cplx(0.0));
  for (const auto& [eps, mon] : V.dilog_terms) {
    int a = -eps * mon.exps[n];
    if (a == 0) continue;
    Jet M = jet_const(cplx(1.0), len);
    for (std::size_t j = 0; j <= n; ++j)
      if (mon.exps[j] != 0) M = jet_mul(M, jet_pow(values[j], mon.exps[j]));
    Jet one_minus(len, cplx(0.0));
    one_minus[0] = cplx(1.0);
    for (std::size_t k = 0; k < len; ++k) one_minus[k] -= M[k];
    Jet lg = jet_log(one_minus);
    for (std::size_t k = 0; k < len; ++k)
      total[k] += static_cast<double>(a) * lg[k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Jet lg = jet_log(values[j]);
    for (std::size_t k = 0; k < len; ++k)
      total[k] += 2.0 * V.bilinear[n][j].get_d() * lg[k];
  }
  if (len > 1) total[1] += 2.0 * V.bilinear[n][n].get_d();  // log m = u
  total[0] = cplx(0.0, -2.0 * kPi);
  return total;
}

}  // namespace nz
