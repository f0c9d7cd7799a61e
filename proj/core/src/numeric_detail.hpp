#ifndef NZ_NUMERIC_DETAIL_HPP
#define NZ_NUMERIC_DETAIL_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "nz/errors.hpp"
#include "nz/multipoly.hpp"
#include "nz/potential.hpp"

namespace nz::detail {

// A polynomial flattened to double coefficients with exponents aligned to a
// fixed variable order, for fast repeated evaluation.
struct CompiledPoly {
  std::vector<double> coeffs;
  std::vector<std::vector<int>> exps;  // one exponent row per term

  static CompiledPoly from(const MultiPoly& p,
                           const std::vector<std::string>& order) {
    CompiledPoly out;
    std::vector<int> where(p.vars().size(), -1);
    for (std::size_t j = 0; j < p.vars().size(); ++j) {
      for (std::size_t k = 0; k < order.size(); ++k)
        if (order[k] == p.vars()[j]) where[j] = static_cast<int>(k);
      if (where[j] < 0)
        throw DegenerateInput("compile: variable " + p.vars()[j] +
                              " missing from evaluation order");
    }
    for (const auto& [e, c] : p.terms()) {
      out.coeffs.push_back(c.get_d());
      std::vector<int> row(order.size(), 0);
      for (std::size_t j = 0; j < e.size(); ++j) row[where[j]] = e[j];
      out.exps.push_back(std::move(row));
    }
    return out;
  }

  cplx eval(const std::vector<cplx>& values) const {
    cplx total(0.0);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      cplx term(coeffs[t]);
      for (std::size_t j = 0; j < values.size(); ++j) {
        int e = exps[t][j];
        if (e == 0) continue;
        cplx b = e > 0 ? values[j] : 1.0 / values[j];
        for (int k = std::abs(e); k > 0; --k) term *= b;
      }
      total += term;
    }
    return total;
  }

  // Sum of term magnitudes at the same point, for relative residuals.
  double magnitude(const std::vector<cplx>& values) const {
    double total = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      double term = std::abs(coeffs[t]);
      for (std::size_t j = 0; j < values.size(); ++j) {
        int e = exps[t][j];
        if (e != 0) term *= std::pow(std::abs(values[j]), e);
      }
      total += term;
    }
    return total;
  }
};

// In-place Gaussian elimination with partial pivoting; returns false when
// the matrix is numerically singular.
bool solve_linear(std::vector<std::vector<cplx>>& a, std::vector<cplx>& b);

// Compiled gluing system with its Jacobian in log variables, over the
// evaluation order (vars..., m).
struct CompiledSystem {
  std::vector<std::string> order;
  std::vector<CompiledPoly> equations;
  // d(eq_i)/d(log var_j): polynomial x_j * d/dx_j, compiled.
  std::vector<std::vector<CompiledPoly>> jacobian;

  explicit CompiledSystem(const GluingSystem& sys);

  std::size_t n() const { return equations.size(); }
  // values = (x..., m); fills f (size n) and relative residual.
  double residuals(const std::vector<cplx>& values,
                   std::vector<cplx>* f = nullptr) const;
  // Newton iteration on x at fixed m; returns true on convergence.
  bool newton(std::vector<cplx>& x, cplx m, double tol, int max_iter) const;
};

// 2v = dPhi/du on principal branches.
cplx two_v_raw(const GluingSystem& sys, const std::vector<cplx>& x, cplx m);

// 2v with the 2 pi i multiple chosen nearest to `near`.
cplx two_v(const GluingSystem& sys, const std::vector<cplx>& x, cplx m,
           cplx near);

// Partial derivatives of 2v with respect to (log x_1..log x_n, u).
std::vector<cplx> two_v_gradient(const GluingSystem& sys,
                                 const std::vector<cplx>& x, cplx m);

}  // namespace nz::detail

#endif  // NZ_NUMERIC_DETAIL_HPP
