#include "nz/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nz/errors.hpp"

namespace nz {

namespace {

std::vector<int> sorted_labels(const Triangulation& t) {
  std::vector<int> labels;
  for (const auto& term : t.terms) {
    labels.push_back(term.in_labels[0]);
    labels.push_back(term.in_labels[1]);
    labels.push_back(term.out_labels[0]);
    labels.push_back(term.out_labels[1]);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

int checked_int(const Rational& r, const char* where) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1)
    throw NonIntegerExponent(std::string(where) + ": exponent " +
                             c.get_str() + " is not an integer");
  return static_cast<int>(c.get_num().get_si());
}

}  // namespace

void validate(const Triangulation& t) {
  std::map<int, int> in_count;
  std::map<int, int> out_count;
  for (std::size_t i = 0; i < t.terms.size(); ++i) {
    const TetraTerm& term = t.terms[i];
    // A label may self-glue an in-slot to an out-slot of the same
    // tetrahedron; the per-label arity check below still rejects any
    // label filling two in-slots or two out-slots.
    if (term.epsilon != 1 && term.epsilon != -1)
      throw GluingError("validate: tetrahedron " + std::to_string(i) +
                        " has orientation " + std::to_string(term.epsilon));
    ++in_count[term.in_labels[0]];
    ++in_count[term.in_labels[1]];
    ++out_count[term.out_labels[0]];
    ++out_count[term.out_labels[1]];
  }
  for (int l : sorted_labels(t)) {
    if (in_count[l] != 1)
      throw GluingError("validate: label p" + std::to_string(l) +
                        " fills " + std::to_string(in_count[l]) +
                        " in-slots (want exactly 1)");
    if (out_count[l] != 1)
      throw GluingError("validate: label p" + std::to_string(l) +
                        " fills " + std::to_string(out_count[l]) +
                        " out-slots (want exactly 1)");
  }
  if (t.meridian.coeffs.empty())
    throw MeridianError("validate: empty meridian form");
  if (t.meridian.u_coeff == 0)
    throw MeridianError("validate: meridian form has zero u coefficient");
  for (const auto& [label, coeff] : t.meridian.coeffs)
    if (in_count.find(label) == in_count.end())
      throw MeridianError("validate: meridian references unknown label p" +
                          std::to_string(label));
}

LinearReduction reduce(const Triangulation& t, int pin_label) {
  if (t.terms.empty()) throw RankError("reduce: empty triangulation");
  validate(t);

  std::vector<int> labels = sorted_labels(t);
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  std::size_t n_labels = labels.size();
  std::size_t u_col = n_labels;  // extra column: coefficient of u

  if (pin_label >= 0 && index.find(pin_label) == index.end())
    throw RankError("reduce: pin label p" + std::to_string(pin_label) +
                    " does not occur");

  // Constraint rows over (labels..., u), each summing to zero.
  std::vector<std::vector<Rational>> rows;
  for (const auto& term : t.terms) {
    std::vector<Rational> row(n_labels + 1, Rational(0));
    int a = term.in_labels[0], b = term.in_labels[1];
    int c = term.out_labels[0], d = term.out_labels[1];
    if (term.epsilon == 1) {  // c = a + b
      row[index[a]] += 1;
      row[index[b]] += 1;
      row[index[c]] -= 1;
    } else {  // a = c + d
      row[index[c]] += 1;
      row[index[d]] += 1;
      row[index[a]] -= 1;
    }
    rows.push_back(std::move(row));
  }
  {
    std::vector<Rational> row(n_labels + 1, Rational(0));
    for (const auto& [label, coeff] : t.meridian.coeffs)
      row[index[label]] += coeff;
    row[u_col] = -t.meridian.u_coeff;
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan over Q, pivoting on label columns only; u stays free.
  std::vector<std::size_t> pivot_cols;
  auto eliminate_rows = [&]() {
    pivot_cols.clear();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_labels && rank < rows.size(); ++col) {
      std::size_t pr = rank;
      while (pr < rows.size() && rows[pr][col] == 0) ++pr;
      if (pr == rows.size()) continue;
      std::swap(rows[rank], rows[pr]);
      Rational pv = rows[rank][col];
      for (auto& x : rows[rank]) x /= pv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][col] == 0) continue;
        Rational f = rows[i][col];
        for (std::size_t j = 0; j <= n_labels; ++j)
          rows[i][j] -= f * rows[rank][j];
      }
      pivot_cols.push_back(col);
      ++rank;
    }
    // A leftover row with no label part but a u part would force u = 0.
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (rows[i][u_col] != 0)
        throw RankError("reduce: constraints force u = 0");
    rows.resize(rank);
  };
  eliminate_rows();

  // One shape variable less than the tetrahedron count is the fully
  // reduced parametrization; anything beyond that is residual gauge
  // freedom, removed by pinning labels to zero (requested label first,
  // then lowest ids).  A label already determined by the constraints
  // cannot be pinned.
  std::size_t target = t.terms.size() - 1;
  auto free_count = [&]() { return n_labels - pivot_cols.size(); };
  if (free_count() < target)
    throw RankError("reduce: constraints leave too few free variables");
  int pinned = -1;
  std::vector<int> candidates;
  if (pin_label >= 0) candidates.push_back(pin_label);
  for (int l : labels)
    if (l != pin_label) candidates.push_back(l);
  for (int cand : candidates) {
    if (free_count() == target) break;
    std::size_t col = index[cand];
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) !=
        pivot_cols.end())
      continue;  // already a pivot: determined, not a gauge direction
    std::vector<Rational> row(n_labels + 1, Rational(0));
    row[col] = 1;
    rows.push_back(std::move(row));
    eliminate_rows();
    if (pinned < 0) pinned = cand;
  }
  if (free_count() != target)
    throw RankError("reduce: residual gauge freedom could not be fixed");

  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < n_labels; ++col)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) ==
        pivot_cols.end())
      free_cols.push_back(col);
  if (free_cols.empty())
    throw RankError("reduce: no free variable left after gauge fixing");

  LinearReduction red;
  red.labels = labels;
  red.pinned_label = pinned;
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    red.var_names.push_back("x" + std::to_string(k + 1));
  std::size_t dim = free_cols.size();
  red.rows.assign(n_labels, std::vector<Rational>(dim + 1, Rational(0)));
  for (std::size_t k = 0; k < dim; ++k) red.rows[free_cols[k]][k] = 1;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    std::size_t pc = pivot_cols[i];
    for (std::size_t k = 0; k < dim; ++k)
      red.rows[pc][k] = -rows[i][free_cols[k]];
    red.rows[pc][dim] = -rows[i][u_col];
  }
  return red;
}

PotentialExpression build_potential(const Triangulation& t,
                                    const LinearReduction& reduction) {
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < reduction.labels.size(); ++i)
    index[reduction.labels[i]] = i;
  std::size_t dim = reduction.var_names.size();

  PotentialExpression V;
  V.vars = reduction.var_names;
  V.bilinear.assign(dim + 1, std::vector<Rational>(dim + 1, Rational(0)));
  V.linear_ipi.assign(dim + 1, Rational(0));

  int eps_sum = 0;
  for (const auto& term : t.terms) {
    eps_sum += term.epsilon;
    const auto& rb = reduction.rows[index.at(term.in_labels[1])];
    const auto& rd = reduction.rows[index.at(term.out_labels[1])];
    // Dilogarithm argument exponents: d - b for S, b - d for S^{-1}; the
    // modulus stays e^{d-b} for both orientations.
    std::vector<Rational> arg(dim + 1);
    for (std::size_t j = 0; j <= dim; ++j)
      arg[j] = Rational(term.epsilon) * (rd[j] - rb[j]);
    Monomial arg_mon, mod_mon;
    arg_mon.exps.resize(dim + 1);
    mod_mon.exps.resize(dim + 1);
    for (std::size_t j = 0; j <= dim; ++j) {
      arg_mon.exps[j] = checked_int(arg[j], "build_potential");
      mod_mon.exps[j] = term.epsilon * arg_mon.exps[j];
    }
    V.dilog_terms.emplace_back(term.epsilon, arg_mon);
    V.tetra_moduli.emplace_back(1, mod_mon);

    // Bilinear part: the paired linear variable is the first in-label for
    // S and the first out-label for S^{-1}.
    int ylabel =
        term.epsilon == 1 ? term.in_labels[0] : term.out_labels[0];
    const auto& ry = reduction.rows[index.at(ylabel)];
    for (std::size_t i = 0; i <= dim; ++i)
      for (std::size_t j = 0; j <= dim; ++j)
        V.bilinear[i][j] +=
            Rational(term.epsilon) * (arg[i] * ry[j] + arg[j] * ry[i]) / 2;
  }
  V.const_pi2 = Rational(-eps_sum, 6);
  return V;
}

PotentialExpression build_potential(const Triangulation& t) {
  return build_potential(t, reduce(t));
}

Triangulation ptb_triangulation(const std::string& word) {
  if (word.empty())
    throw DegenerateInput("ptb_triangulation: empty monodromy word");
  bool has_l = false, has_r = false;
  for (char ch : word) {
    if (ch == 'L') has_l = true;
    else if (ch == 'R') has_r = true;
    else
      throw DegenerateInput(std::string("ptb_triangulation: invalid letter '") +
                            ch + "'");
  }
  if (!has_l || !has_r)
    throw NotHyperbolic(
        "ptb_triangulation: a single-letter monodromy is not hyperbolic");

  // Rotate cyclically so the word reads L^{s_1} R^{t_1} ... L^{s_n} R^{t_n}
  // (a conjugation, which does not change the bundle).
  std::string w = word;
  while (!(w.front() == 'L' && w.back() == 'R'))
    w = w.back() + w.substr(0, w.size() - 1);
  std::vector<std::pair<int, int>> runs;  // (s_k, t_k)
  for (std::size_t i = 0; i < w.size();) {
    int s = 0, tcount = 0;
    while (i < w.size() && w[i] == 'L') ++s, ++i;
    while (i < w.size() && w[i] == 'R') ++tcount, ++i;
    runs.emplace_back(s, tcount);
  }
  int n = static_cast<int>(runs.size());

  // Symbolic labels a_{k,j}, b_{k,j}, c_{k,i}, d_{k,i} with the cyclic
  // identifications b_{k,0}=c_{k+1,0}, a_{k,0}=d_{k+1,0},
  // b_{k,t_k}=c_{k,s_k}, a_{k,t_k}=d_{k,s_k}; union-find merges them.
  auto key = [&](char fam, int k, int j) { return ((fam * 64 + k) << 8) | j; };
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto touch = [&](int x) {
    if (parent.find(x) == parent.end()) parent[x] = x;
  };
  auto unite = [&](int x, int y) {
    touch(x);
    touch(y);
    parent[find(x)] = find(y);
  };
  for (int k = 0; k < n; ++k) {
    auto [s, tk] = runs[k];
    for (int j = 0; j <= tk; ++j) touch(key('a', k, j)), touch(key('b', k, j));
    for (int i = 0; i <= s; ++i) touch(key('c', k, i)), touch(key('d', k, i));
  }
  for (int k = 0; k < n; ++k) {
    int next = (k + 1) % n;
    unite(key('b', k, 0), key('c', next, 0));
    unite(key('a', k, 0), key('d', next, 0));
    unite(key('b', k, runs[k].second), key('c', k, runs[k].first));
    unite(key('a', k, runs[k].second), key('d', k, runs[k].first));
  }
  std::map<int, int> id;  // representative -> 1-based label id
  auto label = [&](char fam, int k, int j) {
    int rep = find(key(fam, k, j));
    auto it = id.find(rep);
    if (it == id.end())
      it = id.emplace(rep, static_cast<int>(id.size()) + 1).first;
    return it->second;
  };

  Triangulation tr;
  tr.name = "ptb_" + word;
  for (int k = 0; k < n; ++k) {
    auto [s, tk] = runs[k];
    for (int i = 0; i < s; ++i)
      tr.terms.push_back({-1,
                          {label('d', k, i), label('c', k, i + 1)},
                          {label('d', k, i + 1), label('c', k, i)}});
    for (int j = 0; j < tk; ++j)
      tr.terms.push_back({1,
                          {label('b', k, j), label('a', k, j + 1)},
                          {label('b', k, j + 1), label('a', k, j)}});
  }
  for (int k = 0; k < n; ++k) {
    auto [s, tk] = runs[k];
    tr.meridian.coeffs[label('c', k, 0)] += 1;
    tr.meridian.coeffs[label('c', k, s)] -= 1;
    tr.meridian.coeffs[label('a', k, 0)] -= 1;
    tr.meridian.coeffs[label('a', k, tk)] += 1;
  }
  for (auto it = tr.meridian.coeffs.begin(); it != tr.meridian.coeffs.end();)
    it = it->second == 0 ? tr.meridian.coeffs.erase(it) : std::next(it);
  tr.meridian.u_coeff = 2;
  tr.notes = "once-punctured torus bundle, monodromy " + word;
  return tr;
}

}  // namespace nz
