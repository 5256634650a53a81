#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulervol/multipoly.hpp"
#include "eulervol/rational.hpp"

namespace eulervol {

/* univariate Laurent polynomial in z that is doubly monic: the lowest
   coefficient (exponent -m) and the highest (exponent n) are both 1, with
   m, n >= 1. every coefficient is a MultiPoly over one shared variable set,
   so generic, sparse-generic, and numeric instances all share the machinery */
class LaurentPoly {
 public:
  /* z^-m + a_{-m+1} z^{-m+1} + ... + a_{n-1} z^{n-1} + z^n with the m+n-1
     middle coefficients as independent variables, ordered by exponent */
  static LaurentPoly generic(int m, int n);

  /* the same window with fixed middle coefficients; middle lists the values
     at exponents -m+1, ..., n-1 and must have length m+n-1 */
  static LaurentPoly numeric(int m, int n, const std::vector<Rational>& middle);

  /* middle coefficients are variables exactly at the exponents congruent to
     n modulo d and zero elsewhere; requires d >= 1 */
  static LaurentPoly sparse_generic(int m, int n, int d);

  int low_degree() const { return low_; }
  int high_degree() const { return high_; }
  int variable_count() const { return var_count_; }

  /* zero polynomial outside the window or at a vanished position */
  const MultiPoly& coefficient(int exponent) const;

  /* exponents carrying a nonzero coefficient, ascending */
  std::vector<int> support() const;

  LaurentPoly operator*(const LaurentPoly& other) const;

 private:
  LaurentPoly(int low, int high, int var_count);
  int low_;
  int high_;
  int var_count_;
  MultiPoly zero_;
  std::map<int, MultiPoly> coeffs_;
};

/* constant terms of f^1, ..., f^K by iterated exact multiplication */
std::vector<MultiPoly> laurent_power_constant_terms(const LaurentPoly& f, int K);

/* constant terms of the powers of the generic doubly monic window [-m, n],
   as polynomials in the m+n-1 middle coefficients */
std::vector<MultiPoly> power_constant_terms(int m, int n, int K);

/* numeric specialization; middle as in LaurentPoly::numeric */
std::vector<Rational> constant_terms_numeric(const std::vector<Rational>& middle,
                                             int m, int n, int K);

/* argument pack for the root-variable polynomials P_k */
struct RootSystemSpec {
  RootSystemSpec(int m, int N, int k);
  int m, N, k;
};

/* P_k = sum over integer vectors a with 0 <= a_i <= k and sum a_i = m*k of
   (prod_i binomial(k, a_i)) r^a, a polynomial in r_1..r_N */
MultiPoly pk_polynomial(int m, int N, int k);

/* the same coefficient extracted from the fully expanded product of the N*k
   linear factors (1 + r_i z); no binomial coefficients involved */
MultiPoly pk_expand_oracle(int m, int N, int k);

/* exponent vectors with nonzero coefficient, sorted ascending
   lexicographically */
std::vector<Exponents> newton_support(const MultiPoly& p);

/* family shape for sparse windows: d must divide m+n */
struct SparseFamilySpec {
  SparseFamilySpec(int m, int n, int d);
  int m, n, d;
};

/* exponents in (-m, n) congruent to n modulo d, ascending: the positions of
   the free coefficients of a sparse window */
std::vector<int> sparse_variable_exponents(int m, int n, int d);

struct SparseGenerators {
  std::vector<int> variable_exponents;  // b-variable positions, ascending
  std::vector<int> kept_k;              // powers with a surviving generator
  std::vector<int> dropped_k;           // powers whose constant term vanishes
  std::vector<MultiPoly> generators;    // aligned with kept_k
};

/* constant terms of f^1..f^{m+n-1} for the sparse-generic window, with the
   identically-zero ones dropped and recorded */
SparseGenerators sparse_generators(const SparseFamilySpec& spec);

/* printing helpers: names aligned with the variable orderings above */
std::vector<std::string> coefficient_variable_names(int m, int n);
std::vector<std::string> sparse_variable_names(const std::vector<int>& exponents);
std::vector<std::string> root_variable_names(int N);

}  // namespace eulervol
