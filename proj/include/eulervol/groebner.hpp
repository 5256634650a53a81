#pragma once

#include <string>
#include <vector>

#include "eulervol/multipoly.hpp"
#include "eulervol/rational.hpp"

namespace eulervol {

/* graded reverse-lexicographic order with an explicit variable ranking;
   ranking[j] names the variable playing the conventional j-th role, so the
   identity ranking is the plain grevlex of multipoly.hpp */
class MonomialOrder {
 public:
  static MonomialOrder grevlex(int var_count);
  static MonomialOrder grevlex_ranked(const std::vector<int>& variable_ranking);

  int var_count() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }

  /* -1 when a is smaller, 0 on equality, +1 when a is larger */
  int compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

  /* largest exponent vector of p; p must be nonzero */
  Exponents leading_exponents(const MultiPoly& p) const;

 private:
  explicit MonomialOrder(std::vector<int> ranking);
  std::vector<int> ranking_;
};

struct Ideal {
  int var_count = 0;
  std::vector<MultiPoly> generators;
  std::vector<std::string> variable_names;  // optional; reports fall back to defaults
};

/* reduced basis: monic elements, pairwise indivisible leading monomials,
   every non-leading monomial irreducible, sorted by ascending leading
   monomial. an empty element list is the zero ideal */
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<MultiPoly> elements;
};

/* explicit resource budget; exceeding it raises CapExceeded, which is a
   budget statement and never a mathematical verdict */
struct BuchbergerLimits {
  long max_pairs = 200000;  // S-pairs processed
  int max_degree = 64;      // total degree of any new basis element
};

/* remainder of p under multivariate division by basis (first divisor wins);
   no monomial of the result is divisible by any basis leading monomial */
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order);

/* classical S-polynomial; both inputs must be nonzero */
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/* Buchberger with the coprime and chain pair-skipping criteria, degree-then-
   index pair selection, and content removal after every reduction */
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerLimits& limits = {});

/* the basis is exactly {1} */
bool is_unit(const GroebnerBasis& g);

/* every variable shows up as a pure power among the leading monomials */
bool is_zero_dimensional(const GroebnerBasis& g);

/* number of standard monomials (those divisible by no leading monomial);
   0 for the unit ideal; throws domain_error when not zero-dimensional */
long ideal_degree(const GroebnerBasis& g);

struct TheoremReport {
  int m = 0;
  int n = 0;
  int d = 1;
  std::vector<std::string> generator_text;
  int basis_size = 0;
  bool cap_exceeded = false;
  bool zero_dimensional = false;
  bool unit_ideal = false;
  long degree = -1;  // -1 when unavailable (cap exceeded or positive-dimensional)
  Integer expected;
  bool match = false;
  double seconds = 0.0;
};

/* degree of the ideal generated by the constant terms of the first m+n-1
   powers of the generic window, against the classical count; m+n <= 6 */
TheoremReport verify_theorem1(int m, int n, const BuchbergerLimits& limits = {});

/* same for the sparse window in the b-variables against the shift-refined
   count; d | m+n, m+n <= 8, (m+n)/d <= 6 */
TheoremReport verify_theorem5(int m, int n, int d, const BuchbergerLimits& limits = {});

}  // namespace eulervol
