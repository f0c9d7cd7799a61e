#ifndef NZ_MULTIPOLY_HPP
#define NZ_MULTIPOLY_HPP

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "nz/errors.hpp"

namespace nz {

using BigInt = mpz_class;
using Rational = mpq_class;
using cplx = std::complex<double>;

// Graded lexicographic order on exponent vectors of equal length.
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  The variable list is kept sorted; arithmetic between
// polynomials over different variable sets unifies them automatically.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, BigInt, GradedLex>;

  MultiPoly() = default;  // the zero polynomial over no variables

  static MultiPoly constant(BigInt c);
  static MultiPoly variable(const std::string& name);
  // A single term over the given (sorted or unsorted) variable list.
  static MultiPoly monomial(std::vector<std::string> vars,
                            std::vector<int> exps, BigInt coeff);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Index of a variable in vars(), or -1 when absent.
  int var_index(const std::string& name) const;
  int degree(const std::string& var) const;
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  bool operator==(const MultiPoly& other) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly derivative(const std::string& var) const;
  // GCD of all coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;
  // Exact division; throws DegenerateInput when the division is not exact.
  MultiPoly divide_exact(const MultiPoly& divisor) const;
  // Coefficient of var^k as a polynomial in the remaining variables.
  MultiPoly coefficient_of(const std::string& var, int k) const;
  // Drop variables that no longer occur (canonical form after division).
  MultiPoly pruned() const;
  // Divide every exponent of var by the factor (e.g. to map l^2 -> l);
  // throws DegenerateInput if some exponent is not a multiple.
  MultiPoly map_exponents_down(const std::string& var, int factor) const;

  // Evaluate with values aligned to vars().
  cplx eval(const std::vector<cplx>& values) const;
  cplx eval(const std::map<std::string, cplx>& values) const;
  // Sum of |term| magnitudes at the same point, for relative residuals.
  double eval_magnitude(const std::map<std::string, cplx>& values) const;

  // Text format: sum of <int>*v^a*w^b terms, e.g. "-m^4 + l - 2*l*m^2".
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  static void unify(const MultiPoly& a, const MultiPoly& b, MultiPoly& ua,
                    MultiPoly& ub);
  MultiPoly with_vars(const std::vector<std::string>& new_vars) const;
  void trim();
};

// Exact Sylvester resultant eliminating var, via fraction-free Bareiss
// elimination.  Throws DegenerateInput on zero input or when var is missing
// from both polynomials.  A nonzero term_limit caps the size of every
// intermediate matrix entry; exceeding it throws SwellLimit.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q,
                    const std::string& var, std::size_t term_limit = 0);

// Polynomial GCD over Z (primitive PRS, recursive in the variables).
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Remove integer content and reduce repeated factors to multiplicity one.
MultiPoly squarefree_and_content(const MultiPoly& p);

// Coefficient matrix of a bivariate polynomial in (l, m): rows indexed by
// ascending powers of m^2, columns by ascending powers of l.
struct NewtonMatrix {
  std::vector<std::vector<BigInt>> rows;

  bool operator==(const NewtonMatrix& other) const = default;
};

// Throws MatrixConventionError when odd powers of m are present; accepts
// any polynomial whose variables are a subset of {l, m}.
NewtonMatrix newton_matrix(const MultiPoly& a);

// Inverse of newton_matrix (up to the exponent shift that newton_matrix
// applies to make the first row/column nonzero).
MultiPoly newton_matrix_to_poly(const NewtonMatrix& matrix);

}  // namespace nz

#endif  // NZ_MULTIPOLY_HPP
