#include "nz/potential.hpp"

#include <cmath>
#include <cstdlib>

#include "nz/complexfn.hpp"
#include "nz/errors.hpp"

namespace nz {

namespace {

constexpr double kPi = 3.14159265358979323846;

double to_double(const Rational& r) { return r.get_d(); }

// 2 * r as an int; throws when 2r is not integral.
int twice_as_int(const Rational& r, const char* where) {
  Rational two_r = r * 2;
  two_r.canonicalize();
  if (two_r.get_den() != 1)
    throw NonIntegerExponent(std::string(where) +
                             ": exponent 2*(" + r.get_str() +
                             ") is not an integer");
  if (!two_r.get_num().fits_sint_p())
    throw NonIntegerExponent(std::string(where) + ": exponent overflow");
  return static_cast<int>(two_r.get_num().get_si());
}

// The monomial prod X_j^{exps_j} over the full variable list as a MultiPoly,
// split by exponent sign into (numerator, denominator).
void split_monomial(const std::vector<std::string>& names,
                    const std::vector<int>& exps, MultiPoly& numer,
                    MultiPoly& denom) {
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (exps[j] > 0)
      numer = numer * MultiPoly::variable(names[j]).pow(exps[j]);
    else if (exps[j] < 0)
      denom = denom * MultiPoly::variable(names[j]).pow(-exps[j]);
  }
}

// 1 - M for M = N/D cleared to D - N; the caller must absorb the dropped
// monomial D into the equation's monomial part.
MultiPoly one_minus_monomial(const std::vector<std::string>& names,
                             const Monomial& mon) {
  MultiPoly numer = MultiPoly::constant(1);
  MultiPoly denom = MultiPoly::constant(1);
  split_monomial(names, mon.exps, numer, denom);
  return denom - numer;
}

// Builds the cleared polynomial for prod_t (1 - M_t)^{a_t} * X^mono = rhs,
// where rhs is +1, -1, or +-l^d: the positive-exponent side minus rhs times
// the negative-exponent side.
MultiPoly cleared_equation(const std::vector<std::string>& names,
                           const std::vector<std::pair<int, Monomial>>& terms,
                           const std::vector<int>& factor_exps,
                           std::vector<int> mono, const MultiPoly& rhs) {
  MultiPoly numer = MultiPoly::constant(1);
  MultiPoly denom = MultiPoly::constant(1);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    int a = factor_exps[t];
    if (a == 0) continue;
    MultiPoly f = one_minus_monomial(names, terms[t].second);
    if (a > 0)
      numer = numer * f.pow(a);
    else
      denom = denom * f.pow(-a);
    // (1 - M)^a = (D - N)^a * D^{-a} with D the negative-exponent part.
    const auto& exps = terms[t].second.exps;
    for (std::size_t j = 0; j < mono.size(); ++j)
      if (exps[j] < 0) mono[j] += a * exps[j];
  }
  split_monomial(names, mono, numer, denom);
  return (numer - rhs * denom).pruned();
}

cplx ipow(cplx base, int e) {
  if (e == 0) return cplx(1.0);
  cplx b = e > 0 ? base : 1.0 / base;
  int k = std::abs(e);
  cplx acc(1.0);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

cplx eval_monomial(const Monomial& monomial, const std::vector<cplx>& x,
                   cplx m) {
  cplx val(1.0);
  for (std::size_t j = 0; j < monomial.exps.size(); ++j) {
    cplx base = j < x.size() ? x[j] : m;
    val *= ipow(base, monomial.exps[j]);
  }
  return val;
}

cplx evaluate(const PotentialExpression& V, const std::vector<cplx>& x,
              cplx m) {
  if (x.size() != V.n_vars())
    throw DegenerateInput("evaluate: argument count mismatch");
  cplx total = to_double(V.const_pi2) * kPi * kPi;
  for (std::size_t t = 0; t < V.dilog_terms.size(); ++t) {
    cplx M = eval_monomial(V.dilog_terms[t].second, x, m);
    if (M == cplx(0.0) || M == cplx(1.0))
      throw SingularArgument("evaluate: dilogarithm argument " +
                             std::to_string(t) + " is " +
                             (M == cplx(0.0) ? "0" : "1"));
    total += static_cast<double>(V.dilog_terms[t].first) * li2(M);
  }
  std::size_t n = V.n_vars();
  std::vector<cplx> logs(n + 1);
  for (std::size_t j = 0; j < n; ++j) logs[j] = std::log(x[j]);
  logs[n] = std::log(m);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      double b = to_double(V.bilinear[i][j]);
      if (b != 0.0) total += b * logs[i] * logs[j];
    }
  for (std::size_t i = 0; i <= n; ++i) {
    double c = to_double(V.linear_ipi[i]);
    if (c != 0.0) total += c * cplx(0.0, kPi) * logs[i];
  }
  return total;
}

std::vector<cplx> gradient(const PotentialExpression& V,
                           const std::vector<cplx>& x, cplx m) {
  if (x.size() != V.n_vars())
    throw DegenerateInput("gradient: argument count mismatch");
  std::size_t n = V.n_vars();
  std::vector<cplx> logs(n + 1);
  for (std::size_t j = 0; j < n; ++j) logs[j] = std::log(x[j]);
  logs[n] = std::log(m);

  std::vector<cplx> grad(n + 1, cplx(0.0));
  for (std::size_t t = 0; t < V.dilog_terms.size(); ++t) {
    const auto& [eps, mon] = V.dilog_terms[t];
    cplx M = eval_monomial(mon, x, m);
    if (M == cplx(1.0))
      throw SingularArgument("gradient: dilogarithm argument " +
                             std::to_string(t) + " is 1");
    cplx lg = std::log(cplx(1.0) - M);
    for (std::size_t k = 0; k <= n; ++k)
      if (mon.exps[k] != 0)
        grad[k] -= static_cast<double>(eps * mon.exps[k]) * lg;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j <= n; ++j) {
      double b = to_double(V.bilinear[k][j]);
      if (b != 0.0) grad[k] += 2.0 * b * logs[j];
    }
    double c = to_double(V.linear_ipi[k]);
    if (c != 0.0) grad[k] += c * cplx(0.0, kPi);
  }
  return grad;
}

GluingSystem gluing_equations(const PotentialExpression& V) {
  std::size_t n = V.n_vars();
  GluingSystem sys;
  sys.vars = V.vars;
  sys.potential = V;

  std::vector<std::string> names = V.vars;
  names.push_back("m");

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> factor_exps;
    for (const auto& [eps, mon] : V.dilog_terms)
      factor_exps.push_back(-eps * mon.exps[k]);
    std::vector<int> mono_exps(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      mono_exps[j] = twice_as_int(V.bilinear[k][j], "gluing_equations");
    // exp of an i*pi linear term flips the sign of one side.
    Rational c = V.linear_ipi[k];
    c.canonicalize();
    if (c.get_den() != 1)
      throw NonIntegerExponent("gluing_equations: fractional i*pi term");
    MultiPoly rhs = MultiPoly::constant(
        mpz_odd_p(c.get_num().get_mpz_t()) ? -1 : 1);
    sys.equations.push_back(cleared_equation(names, V.dilog_terms,
                                             factor_exps, mono_exps, rhs));
  }
  return sys;
}

void longitude_equation(GluingSystem& sys,
                        const std::vector<cplx>* complete_solution) {
  const PotentialExpression& V = sys.potential;
  std::size_t n = V.n_vars();
  std::vector<std::string> names = V.vars;
  names.push_back("m");

  // 2v = dPhi/du; collect the (1 - M) exponents and the monomial exponents
  // of exp(2v), then halve when possible.
  sys.ell_dilog_exps.clear();
  for (const auto& [eps, mon] : V.dilog_terms)
    sys.ell_dilog_exps.push_back(-eps * mon.exps[n]);
  sys.ell_monomial_exps.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j)
    sys.ell_monomial_exps[j] =
        twice_as_int(V.bilinear[n][j], "longitude_equation");
  Rational c = V.linear_ipi[n];
  c.canonicalize();
  if (c.get_den() != 1)
    throw NonIntegerExponent("longitude_equation: fractional i*pi term");
  long ipi_count = c.get_num().get_si();

  bool integral = ipi_count % 2 == 0;
  for (int a : sys.ell_dilog_exps) integral = integral && a % 2 == 0;
  for (int a : sys.ell_monomial_exps) integral = integral && a % 2 == 0;
  sys.ell_power = integral ? 1 : 2;
  int halve = integral ? 2 : 1;

  std::vector<int> factor_exps;
  for (int a : sys.ell_dilog_exps) factor_exps.push_back(a / halve);
  std::vector<int> mono_exps(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    mono_exps[j] = sys.ell_monomial_exps[j] / halve;

  sys.sigma = 1;
  if (integral && ((ipi_count / 2) % 2 != 0)) sys.sigma = -sys.sigma;
  if (integral && complete_solution != nullptr) {
    // ell(0) = -1 at the complete structure fixes the branch of the halved
    // product.
    cplx val = ell_values(sys, *complete_solution, cplx(1.0))[0];
    if (std::abs(val - cplx(1.0)) < std::abs(val + cplx(1.0)))
      sys.sigma = -sys.sigma;
  }

  MultiPoly rhs = MultiPoly::variable("l").pow(sys.ell_power);
  if (sys.sigma < 0) rhs = -rhs;
  sys.longitude =
      cleared_equation(names, V.dilog_terms, factor_exps, mono_exps, rhs);
}

std::vector<cplx> ell_values(const GluingSystem& sys,
                             const std::vector<cplx>& x, cplx m) {
  const PotentialExpression& V = sys.potential;
  std::size_t n = V.n_vars();
  int halve = sys.ell_power == 1 ? 2 : 1;
  cplx val(1.0);
  for (std::size_t t = 0; t < V.dilog_terms.size(); ++t) {
    int a = sys.ell_dilog_exps[t] / halve;
    if (a != 0)
      val *= ipow(cplx(1.0) - eval_monomial(V.dilog_terms[t].second, x, m),
                  a);
  }
  for (std::size_t j = 0; j < n; ++j)
    val *= ipow(x[j], sys.ell_monomial_exps[j] / halve);
  val *= ipow(m, sys.ell_monomial_exps[n] / halve);
  if (sys.ell_power == 1) return {val};
  cplx r = std::sqrt(val);
  return {r, -r};
}

}  // namespace nz
