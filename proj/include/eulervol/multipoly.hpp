#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eulervol/rational.hpp"

namespace eulervol {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/* graded reverse-lexicographic comparison; -1 when a < b, 0, +1 when a > b.
   negative entries are allowed so the same order serves Laurent supports */
int grevlex_compare(const Exponents& a, const Exponents& b);

struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_compare(a, b) < 0;
  }
};

/* sparse multivariate polynomial with rational coefficients over a fixed
   number of variables; terms are kept in the canonical grevlex order and
   zero coefficients are never stored */
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrevlexLess>;

  explicit MultiPoly(int var_count);
  static MultiPoly constant(int var_count, const Rational& c);
  static MultiPoly variable(int var_count, int index);
  static MultiPoly monomial(const Exponents& exps, const Rational& c);

  int var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  /* exponent vectors with nonzero coefficient, leading term first */
  std::vector<Exponents> support() const;

  /* total degree; -1 for the zero polynomial */
  int degree() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  int var_count_;
  TermMap terms_;
};

/* "x_1".."x_n" */
std::vector<std::string> default_variable_names(int count);

}  // namespace eulervol
