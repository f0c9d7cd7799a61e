#include "nz/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace nz {

bool GradedLex::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  int ta = std::accumulate(a.begin(), a.end(), 0);
  int tb = std::accumulate(b.begin(), b.end(), 0);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void MultiPoly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

MultiPoly MultiPoly::constant(BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_[{}] = std::move(c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars,
                              std::vector<int> exps, BigInt coeff) {
  if (vars.size() != exps.size())
    throw DegenerateInput("monomial: variable/exponent length mismatch");
  MultiPoly p;
  if (coeff == 0) return p;
  // Sort the variables, carrying the exponents along.
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
  std::vector<int> sorted_exps;
  for (std::size_t i : order) {
    p.vars_.push_back(vars[i]);
    sorted_exps.push_back(exps[i]);
  }
  p.terms_[sorted_exps] = std::move(coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::accumulate(terms_.begin()->first.begin(),
                          terms_.begin()->first.end(), 0) == 0);
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MultiPoly::degree(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return 0;
  int deg = 0;
  for (const auto& [exps, coeff] : terms_) deg = std::max(deg, exps[idx]);
  return deg;
}

int MultiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [exps, coeff] : terms_)
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  return deg;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars) const {
  MultiPoly out;
  out.vars_ = new_vars;
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end())
      throw DegenerateInput("with_vars: target set drops a used variable");
    where[i] = static_cast<int>(it - new_vars.begin());
  }
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> mapped(new_vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) mapped[where[i]] = exps[i];
    out.terms_[mapped] = coeff;
  }
  return out;
}

void MultiPoly::unify(const MultiPoly& a, const MultiPoly& b, MultiPoly& ua,
                      MultiPoly& ub) {
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(merged));
  ua = a.with_vars(merged);
  ub = b.with_vars(merged);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly a, b;
  unify(*this, other, a, b);
  for (const auto& [exps, coeff] : b.terms_) a.terms_[exps] += coeff;
  a.trim();
  return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  return *this + (-other);
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly a, b;
  unify(*this, other, a, b);
  MultiPoly out;
  out.vars_ = a.vars_;
  std::vector<int> exps(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.terms_[exps] += ca * cb;
    }
  }
  out.trim();
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  MultiPoly a, b;
  unify(*this, other, a, b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int idx = var_index(var);
  MultiPoly out;
  if (idx < 0) return out;
  out.vars_ = vars_;
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] == 0) continue;
    std::vector<int> de = exps;
    de[idx] -= 1;
    out.terms_[de] += coeff * exps[idx];
  }
  out.trim();
  return out;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& [exps, coeff] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DegenerateInput("divide_exact: zero divisor");
  MultiPoly r, d;
  unify(*this, divisor, r, d);
  MultiPoly q;
  q.vars_ = r.vars_;
  const auto& [de, dc] = *d.terms_.rbegin();  // leading term of the divisor
  while (!r.terms_.empty()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    std::vector<int> qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) throw DegenerateInput("divide_exact: not divisible");
    }
    BigInt qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rc.get_mpz_t(),
                dc.get_mpz_t());
    if (rem != 0) throw DegenerateInput("divide_exact: not divisible");
    q.terms_[qe] = qc;
    MultiPoly t;
    t.vars_ = r.vars_;
    t.terms_[qe] = qc;
    r = r - t * d;
  }
  return q.pruned();
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int k) const {
  int idx = var_index(var);
  MultiPoly out;
  if (idx < 0) {
    if (k == 0) return *this;
    return out;
  }
  out.vars_ = vars_;
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] != k) continue;
    std::vector<int> e = exps;
    e[idx] = 0;
    out.terms_[e] = coeff;
  }
  return out.pruned();
}

MultiPoly MultiPoly::pruned() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool seen = false;
    for (const auto& [exps, coeff] : terms_)
      if (exps[i] != 0) {
        seen = true;
        break;
      }
    if (seen) used.push_back(vars_[i]);
  }
  if (used.size() == vars_.size()) return *this;
  MultiPoly out;
  out.vars_ = used;
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> e;
    e.reserve(used.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (j < used.size() && vars_[i] == used[j]) {
        e.push_back(exps[i]);
        ++j;
      }
    }
    out.terms_[e] = coeff;
  }
  return out;
}

MultiPoly MultiPoly::map_exponents_down(const std::string& var,
                                        int factor) const {
  int idx = var_index(var);
  if (idx < 0 || factor <= 1) return *this;
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [exps, coeff] : terms_) {
    if (exps[idx] % factor != 0)
      throw DegenerateInput("map_exponents_down: exponent not a multiple");
    std::vector<int> e = exps;
    e[idx] /= factor;
    out.terms_[e] = coeff;
  }
  return out;
}

cplx MultiPoly::eval(const std::vector<cplx>& values) const {
  if (values.size() != vars_.size())
    throw DegenerateInput("eval: value count mismatch");
  cplx sum = 0.0;
  for (const auto& [exps, coeff] : terms_) {
    cplx term = coeff.get_d();
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) term *= std::pow(values[i], exps[i]);
    sum += term;
  }
  return sum;
}

cplx MultiPoly::eval(const std::map<std::string, cplx>& values) const {
  std::vector<cplx> aligned;
  aligned.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end())
      throw DegenerateInput("eval: missing value for variable " + v);
    aligned.push_back(it->second);
  }
  return eval(aligned);
}

double MultiPoly::eval_magnitude(
    const std::map<std::string, cplx>& values) const {
  std::vector<cplx> aligned;
  aligned.reserve(vars_.size());
  for (const auto& v : vars_) aligned.push_back(values.at(v));
  double sum = 0.0;
  for (const auto& [exps, coeff] : terms_) {
    cplx term = coeff.get_d();
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) term *= std::pow(aligned[i], exps[i]);
    sum += std::abs(term);
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print in descending graded-lex order, leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    BigInt c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool has_vars =
        std::accumulate(exps.begin(), exps.end(), 0) > 0;
    if (c != 1 || !has_vars) out << c.get_str();
    bool need_star = c != 1 || !has_vars;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << vars_[i];
      if (exps[i] != 1) out << "^" << exps[i];
    }
  }
  return out.str();
}

namespace {

// Leading coefficient of p viewed as univariate in var.
MultiPoly leading_coeff(const MultiPoly& p, const std::string& var) {
  return p.coefficient_of(var, p.degree(var));
}

// Pseudo-remainder of p by q in var: lc(q)^(dp-dq+1) p = s q + prem.
MultiPoly pseudo_rem(MultiPoly p, const MultiPoly& q, const std::string& var) {
  int dq = q.degree(var);
  MultiPoly lq = leading_coeff(q, var);
  MultiPoly x = MultiPoly::variable(var);
  int dp = p.degree(var);
  while (!p.is_zero() && (dp = p.degree(var)) >= dq) {
    MultiPoly lp = leading_coeff(p, var);
    p = p * lq - lp * x.pow(static_cast<unsigned>(dp - dq)) * q;
    if (p.degree(var) == dp && !p.is_zero())
      throw DegenerateInput("pseudo_rem: degree did not drop");
  }
  return p;
}

// Content of p with respect to var: GCD of its univariate coefficients.
MultiPoly content_in(const MultiPoly& p, const std::string& var) {
  MultiPoly g;
  for (int k = 0; k <= p.degree(var); ++k) {
    MultiPoly c = p.coefficient_of(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero() && g.content() == 1) break;
  }
  return g;
}

MultiPoly normalize_sign(MultiPoly p) {
  if (p.is_zero()) return p;
  if (p.terms().rbegin()->second < 0) return -p;
  return p;
}

constexpr unsigned long kProbePrime = 2147483647UL;  // 2^31 - 1

unsigned long mul_mod(unsigned long a, unsigned long b) {
  return static_cast<unsigned long>(
      static_cast<unsigned long long>(a) * b % kProbePrime);
}

unsigned long pow_mod(unsigned long base, unsigned long e) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return r;
}

// Univariate image of p in var at the point vals (aligned to p.vars(), the
// entry for var unused) mod kProbePrime.  Returns false when the leading
// coefficient vanishes under the map, which would make the image useless.
bool univariate_image(const MultiPoly& p, const std::string& var,
                      const std::vector<unsigned long>& vals,
                      std::vector<unsigned long>& out) {
  int vi = p.var_index(var);
  int deg = p.degree(var);
  out.assign(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    unsigned long t = mpz_fdiv_ui(c.get_mpz_t(), kProbePrime);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (static_cast<int>(j) == vi) continue;
      if (e[j] < 0) return false;
      t = mul_mod(t, pow_mod(vals[j], static_cast<unsigned long>(e[j])));
    }
    if (e[vi] < 0) return false;
    std::size_t k = static_cast<std::size_t>(e[vi]);
    out[k] = (out[k] + t) % kProbePrime;
  }
  return out[static_cast<std::size_t>(deg)] != 0;
}

int univariate_gcd_degree(std::vector<unsigned long> a,
                          std::vector<unsigned long> b) {
  auto strip = [](std::vector<unsigned long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  while (!b.empty()) {
    // a mod b over the prime field.
    unsigned long inv = pow_mod(b.back(), kProbePrime - 2);
    while (a.size() >= b.size()) {
      unsigned long f = mul_mod(a.back(), inv);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        unsigned long s = mul_mod(f, b[j]);
        a[off + j] = (a[off + j] + kProbePrime - s) % kProbePrime;
      }
      strip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Monte Carlo certificate that gcd(p, q) is free of var: if a univariate
// image mod a prime has constant gcd and both leading coefficients survive
// the evaluation, any common factor involving var is ruled out.
bool gcd_free_of(const MultiPoly& p, const MultiPoly& q,
                 const std::string& var) {
  static thread_local std::mt19937 rng(0x9e3779b9u);
  std::uniform_int_distribution<unsigned long> pick(1, kProbePrime - 1);
  std::vector<unsigned long> vp(p.vars().size()), vq(q.vars().size());
  std::vector<unsigned long> ip, iq;
  for (int trial = 0; trial < 4; ++trial) {
    std::map<std::string, unsigned long> point;
    for (const auto& name : p.vars()) point[name] = pick(rng);
    for (const auto& name : q.vars())
      if (!point.count(name)) point[name] = pick(rng);
    for (std::size_t j = 0; j < vp.size(); ++j) vp[j] = point[p.vars()[j]];
    for (std::size_t j = 0; j < vq.size(); ++j) vq[j] = point[q.vars()[j]];
    if (!univariate_image(p, var, vp, ip)) continue;
    if (!univariate_image(q, var, vq, iq)) continue;
    if (univariate_gcd_degree(std::move(ip), std::move(iq)) == 0) return true;
  }
  return false;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p_in, const MultiPoly& q_in) {
  if (p_in.is_zero()) return normalize_sign(q_in);
  if (q_in.is_zero()) return normalize_sign(p_in);
  if (p_in.is_constant() || q_in.is_constant()) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p_in.content().get_mpz_t(),
            q_in.content().get_mpz_t());
    return MultiPoly::constant(g);
  }
  // Work on pruned copies so every listed variable genuinely occurs.
  MultiPoly p = p_in.pruned();
  MultiPoly q = q_in.pruned();
  // Choose the first variable present in either operand as the main one.
  std::string var = p.vars().front();
  if (q.var_index(var) < 0) var = q.vars().front();

  if (p.degree(var) == 0 || q.degree(var) == 0) {
    // var occurs in only one operand: gcd divides that operand's content.
    MultiPoly a = p.degree(var) == 0 ? p : content_in(p, var);
    MultiPoly b = q.degree(var) == 0 ? q : content_in(q, var);
    return poly_gcd(a, b);
  }

  // The common case is a trivial gcd; certify it cheaply before paying
  // for the remainder sequence, whose contents swell in many variables.
  if (gcd_free_of(p, q, var))
    return poly_gcd(content_in(p, var), content_in(q, var));

  MultiPoly cp = content_in(p, var);
  MultiPoly cq = content_in(q, var);
  MultiPoly a = p.divide_exact(cp);
  MultiPoly b = q.divide_exact(cq);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  // Primitive PRS.
  while (!b.is_zero()) {
    MultiPoly r = pseudo_rem(a, b, var);
    a = b;
    if (r.is_zero()) {
      b = r;
    } else {
      b = r.divide_exact(content_in(r, var)).pruned();
    }
  }
  MultiPoly prim = a.divide_exact(content_in(a, var));
  return normalize_sign(poly_gcd(cp, cq) * prim).pruned();
}

MultiPoly squarefree_and_content(const MultiPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree_and_content: zero input");
  MultiPoly out = p.divide_exact(MultiPoly::constant(p.content()));
  for (const auto& var : std::vector<std::string>(out.vars())) {
    if (out.degree(var) == 0) continue;
    MultiPoly g = poly_gcd(out, out.derivative(var));
    if (!g.is_constant()) out = out.divide_exact(g).pruned();
    out = out.divide_exact(MultiPoly::constant(out.content()));
  }
  return normalize_sign(out);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q,
                    const std::string& var, std::size_t term_limit) {
  if (p.is_zero() || q.is_zero())
    throw DegenerateInput("resultant: zero polynomial");
  int dp = p.degree(var);
  int dq = q.degree(var);
  if (dp == 0 && dq == 0)
    throw DegenerateInput("resultant: neither operand involves " + var);
  if (dp == 0) return p.pow(static_cast<unsigned>(dq)).pruned();
  if (dq == 0) return q.pow(static_cast<unsigned>(dp)).pruned();

  // Sylvester matrix: dq rows of p-coefficients, dp rows of q-coefficients.
  int n = dp + dq;
  std::vector<std::vector<MultiPoly>> m(
      n, std::vector<MultiPoly>(n, MultiPoly()));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k)
      m[r][r + dp - k] = p.coefficient_of(var, k);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k)
      m[dq + r][r + dq - k] = q.coefficient_of(var, k);

  // Fraction-free Bareiss elimination; the (n-1, n-1) entry at the end is
  // the determinant.
  MultiPoly prev = MultiPoly::constant(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return MultiPoly();  // singular: resultant is zero
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
        if (term_limit && m[i][j].term_count() > term_limit)
          throw SwellLimit("resultant: intermediate entry exceeds " +
                           std::to_string(term_limit) + " terms");
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return (sign < 0 ? -det : det).pruned();
}

NewtonMatrix newton_matrix(const MultiPoly& a) {
  for (const auto& v : a.vars())
    if (v != "l" && v != "m")
      throw MatrixConventionError("newton_matrix: unexpected variable " + v);
  if (a.is_zero()) throw DegenerateInput("newton_matrix: zero polynomial");
  int li = a.var_index("l");
  int mi = a.var_index("m");
  int lmin = 1 << 30, lmax = 0, mmin = 1 << 30, mmax = 0;
  for (const auto& [exps, coeff] : a.terms()) {
    int le = li >= 0 ? exps[li] : 0;
    int me = mi >= 0 ? exps[mi] : 0;
    if (me % 2 != 0)
      throw MatrixConventionError("newton_matrix: odd power of m");
    lmin = std::min(lmin, le);
    lmax = std::max(lmax, le);
    mmin = std::min(mmin, me);
    mmax = std::max(mmax, me);
  }
  NewtonMatrix out;
  out.rows.assign((mmax - mmin) / 2 + 1,
                  std::vector<BigInt>(lmax - lmin + 1, BigInt(0)));
  for (const auto& [exps, coeff] : a.terms()) {
    int le = li >= 0 ? exps[li] : 0;
    int me = mi >= 0 ? exps[mi] : 0;
    out.rows[(me - mmin) / 2][le - lmin] = coeff;
  }
  return out;
}

MultiPoly newton_matrix_to_poly(const NewtonMatrix& matrix) {
  MultiPoly out;
  for (std::size_t r = 0; r < matrix.rows.size(); ++r)
    for (std::size_t c = 0; c < matrix.rows[r].size(); ++c)
      if (matrix.rows[r][c] != 0)
        out = out + MultiPoly::monomial({"l", "m"},
                                        {static_cast<int>(c),
                                         static_cast<int>(2 * r)},
                                        matrix.rows[r][c]);
  return out;
}

}  // namespace nz
