#include "nz/apoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "nz/errors.hpp"

namespace nz {

namespace {

// Strips the integer content and the common monomial factor; keeps sizes
// and degrees down between elimination rounds.
MultiPoly reduce_intermediate(const MultiPoly& p) {
  MultiPoly q = p.pruned();
  if (q.is_zero()) return q;
  BigInt c = q.content();
  if (c != 1) q = q.divide_exact(MultiPoly::constant(c));
  std::vector<int> mins(q.vars().size(),
                        std::numeric_limits<int>::max());
  for (const auto& [e, coeff] : q.terms())
    for (std::size_t j = 0; j < e.size(); ++j)
      mins[j] = std::min(mins[j], e[j]);
  bool shift = false;
  for (int v : mins) shift = shift || v > 0;
  if (shift)
    q = q.divide_exact(MultiPoly::monomial(q.vars(), mins, 1));
  // Repeated-factor removal is worthwhile while polynomials stay small.
  if (q.term_count() <= 5000) q = squarefree_and_content(q);
  return q.pruned();
}

int degree_or_zero(const MultiPoly& p, const std::string& var) {
  return p.var_index(var) < 0 ? 0 : p.degree(var);
}

MultiPoly double_l_exponents(const MultiPoly& p) {
  MultiPoly out;
  int li = p.var_index("l");
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> exps = e;
    if (li >= 0) exps[li] *= 2;
    out = out + MultiPoly::monomial(p.vars(), exps, c);
  }
  return out;
}

// Convex hull (monotone chain) of lattice points, for the corner check.
std::vector<std::pair<int, int>> hull(std::vector<std::pair<int, int>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const std::pair<int, int>& o, const std::pair<int, int>& a,
                  const std::pair<int, int>& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<int, int>> out(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(out[k - 2], out[k - 1], p) <= 0) --k;
    out[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(out[k - 2], out[k - 1], pts[i]) <= 0) --k;
    out[k++] = pts[i];
  }
  out.resize(k - 1);
  return out;
}

}  // namespace

APolynomial canonicalize(const MultiPoly& p) {
  MultiPoly q = p.pruned();
  if (q.is_zero() || q.var_index("l") < 0 || q.degree("l") == 0)
    throw NoLongitudeVariable(
        "canonicalize: polynomial does not involve the longitude");
  q = squarefree_and_content(q);
  // Divide out every factor free of l: the gcd of the l-coefficients.
  MultiPoly lcontent;
  for (int k = 0; k <= q.degree("l"); ++k) {
    MultiPoly coeff = q.coefficient_of("l", k);
    if (coeff.is_zero()) continue;
    lcontent = lcontent.is_zero() ? coeff : poly_gcd(lcontent, coeff);
    if (lcontent.is_constant()) break;
  }
  if (!lcontent.is_constant()) q = q.divide_exact(lcontent).pruned();
  // Shift so the minimal exponents vanish.
  std::vector<int> mins(q.vars().size(), std::numeric_limits<int>::max());
  for (const auto& [e, c] : q.terms())
    for (std::size_t j = 0; j < e.size(); ++j)
      mins[j] = std::min(mins[j], e[j]);
  bool shift = false;
  for (int v : mins) shift = shift || v > 0;
  if (shift) q = q.divide_exact(MultiPoly::monomial(q.vars(), mins, 1));
  // Sign rule: positive coefficient on the graded-lex leading term.
  if (std::prev(q.terms().end())->second < 0) q = -q;
  APolynomial out;
  out.poly = std::move(q);
  out.canonical = true;
  return out;
}

APolynomial eliminate(const GluingSystem& sys, std::size_t term_budget) {
  if (sys.longitude.is_zero() || sys.longitude.var_index("l") < 0)
    throw NoLongitudeVariable("eliminate: system has no longitude equation");

  std::vector<MultiPoly> polys;
  for (const auto& eq : sys.equations) polys.push_back(eq.pruned());
  MultiPoly lng = sys.longitude;
  if (sys.ell_power == 2) lng = lng.map_exponents_down("l", 2);
  polys.push_back(lng.pruned());

  std::vector<std::string> todo = sys.vars;
  while (!todo.empty()) {
    // Pick the cheapest variable: pivot with the smallest degree, cost
    // summed over the partners it must be paired with.
    std::size_t best_var = 0;
    std::size_t best_pivot = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t vi = 0; vi < todo.size(); ++vi) {
      const std::string& v = todo[vi];
      std::size_t pivot = polys.size();
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (degree_or_zero(polys[i], v) == 0) continue;
        if (pivot == polys.size() ||
            std::pair(polys[i].degree(v), polys[i].term_count()) <
                std::pair(polys[pivot].degree(v), polys[pivot].term_count()))
          pivot = i;
      }
      if (pivot == polys.size()) continue;  // variable already gone
      double cost = 0.0;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i == pivot || degree_or_zero(polys[i], v) == 0) continue;
        cost += static_cast<double>(polys[pivot].term_count()) *
                polys[i].term_count() *
                (polys[pivot].degree(v) + polys[i].degree(v));
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_var = vi;
        best_pivot = pivot;
      }
    }

    std::string v = todo[best_var];
    todo.erase(todo.begin() + best_var);
    if (best_cost == std::numeric_limits<double>::infinity()) continue;

    MultiPoly pivot = polys[best_pivot];
    std::vector<MultiPoly> next;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i == best_pivot) continue;
      if (degree_or_zero(polys[i], v) == 0) {
        next.push_back(polys[i]);
        continue;
      }
      if (pivot.term_count() * polys[i].term_count() > 50 * term_budget)
        throw SwellLimit("eliminate: resultant operands too large in " + v);
      MultiPoly r = resultant(pivot, polys[i], v, term_budget);
      if (r.is_zero())
        throw DegenerateInput(
            "eliminate: vanishing resultant (shared factor) in " + v);
      r = reduce_intermediate(r);
      if (r.term_count() > term_budget)
        throw SwellLimit("eliminate: intermediate polynomial exceeds " +
                         std::to_string(term_budget) + " terms");
      if (!r.is_constant()) next.push_back(std::move(r));
    }
    polys = std::move(next);
  }

  // Combine what remains into a single (l, m) polynomial.
  MultiPoly result;
  for (const auto& p : polys) {
    if (p.var_index("l") < 0) continue;
    result = result.is_zero() ? p : poly_gcd(result, p);
  }
  if (result.is_zero())
    throw NoLongitudeVariable("eliminate: longitude vanished from the result");
  APolynomial out = canonicalize(result);
  if (sys.ell_power == 2) {
    out.poly = double_l_exponents(out.poly);
    out.lambda_form = true;
  }
  return out;
}

PropertyReport verify_properties(const APolynomial& a) {
  PropertyReport report;
  const MultiPoly& p = a.poly;
  report.integer_coefficients = true;  // exact integer representation

  int li = p.var_index("l");
  int mi = p.var_index("m");
  int ldeg = li >= 0 ? p.degree("l") : 0;
  int mdeg = mi >= 0 ? p.degree("m") : 0;

  report.even_m_powers = true;
  if (mi >= 0)
    for (const auto& [e, c] : p.terms())
      if (e[mi] % 2 != 0) report.even_m_powers = false;

  // l -> 1/l, m -> 1/m cleared by the top monomial reverses all exponents.
  MultiPoly reversed;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> exps = e;
    if (li >= 0) exps[li] = ldeg - exps[li];
    if (mi >= 0) exps[mi] = mdeg - exps[mi];
    reversed = reversed + MultiPoly::monomial(p.vars(), exps, c);
  }
  report.inversion_symmetric = (reversed == p || reversed == -p);

  std::vector<std::pair<int, int>> pts;
  std::map<std::pair<int, int>, BigInt> coeff_at;
  for (const auto& [e, c] : p.terms()) {
    std::pair<int, int> pt{li >= 0 ? e[li] : 0, mi >= 0 ? e[mi] : 0};
    pts.push_back(pt);
    coeff_at[pt] = c;
  }
  report.corner_coefficients_unit = true;
  for (const auto& pt : hull(pts)) {
    BigInt c = coeff_at[pt];
    if (!(c == 1 || c == -1)) {
      report.corner_coefficients_unit = false;
      report.details += "corner l^" + std::to_string(pt.first) + " m^" +
                        std::to_string(pt.second) + " has coefficient " +
                        c.get_str() + "; ";
    }
  }
  return report;
}

double zero_locus_check(const NewtonMatrix& matrix, const GluingSystem& sys,
                        int samples, const SolveOptions& opts) {
  MultiPoly poly = newton_matrix_to_poly(matrix);
  SaddleSolution geo = geometric_solution(solve_complete(sys, opts));
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    double radius = 0.1 * std::sqrt((j + 1.0) / samples);
    double angle = 2.0 * std::acos(-1.0) * j / samples;
    cplx u = std::polar(radius, angle);
    ContinuationPath path = continue_solution(sys, geo, u);
    const SaddleSolution& end = path.solutions.back();
    auto rel = [&](cplx ell, cplx m) {
      std::map<std::string, cplx> vals{{"l", ell}, {"m", m}};
      return std::abs(poly.eval(vals)) / poly.eval_magnitude(vals);
    };
    worst = std::max(worst, std::min(rel(end.ell, end.m),
                                     rel(1.0 / end.ell, end.m)));
  }
  return worst;
}

}  // namespace nz
