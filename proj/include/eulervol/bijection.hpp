#pragma once

#include <vector>

#include "eulervol/combinatorics.hpp"

namespace eulervol {

/* a word w on {0..n-1} starting with 0 together with a length-n composition
   x with entries in [0, d); its derived statistic c — the cyclic descent
   count of w plus the sum of x — always lands in (0, d*n) */
class PairWX {
 public:
  PairWX(int n, int d, std::vector<int> w, std::vector<int> x);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<int>& w() const { return w_; }
  const std::vector<int>& x() const { return x_; }

  /* cyclic descents of w as a circular word; 1 for the single-letter word,
     whose periodic extension still steps past a multiple of n each round */
  int circular_descents() const;
  long derived_c() const;

  friend bool operator==(const PairWX& a, const PairWX& b) = default;

 private:
  int n_, d_;
  std::vector<int> w_;
  std::vector<int> x_;
};

/* p_0 = 0 and p_i = n*x_i + (least value congruent to w_i mod n that
   exceeds p_{i-1}); indices into w and x repeat with period n */
struct PSequence {
  std::vector<long> terms;
  int n = 0;
  long c = 0;  // per-period growth: p_{i+n} = p_i + c*n
};

PSequence build_p_sequence(const PairWX& pair, int count);

/* reduce the first d*n p-terms modulo d*n; requires gcd(c, d) = 1, which is
   exactly when the reduction is a permutation */
CircularPermutation pair_to_circular(const PairWX& pair);

struct InverseResult {
  PairWX pair;
  long c = 0;        // cyclic descent count of the input word
  long c_prime = 0;  // inverse of c modulo d (0 when d = 1)
};

/* recover the unique pair mapping to the given word; the word must have
   d*n letters, be fixed under shifting letters by n, and carry a descent
   count coprime to d */
InverseResult circular_to_pair(const CircularPermutation& word, int n, int d);

}  // namespace eulervol
