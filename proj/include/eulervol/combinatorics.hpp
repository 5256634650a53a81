#pragma once

#include <string>
#include <vector>

#include "eulervol/rational.hpp"

namespace eulervol {

/* word form of a permutation of {1..n} */
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> word_;
};

/* positions i with w_i > w_{i+1} */
int descent_count(const Permutation& w);

/* circular word on the letters {0..n}, stored in the canonical rotation
   that starts with 0 */
class CircularPermutation {
 public:
  explicit CircularPermutation(std::vector<int> word);

  /* comma-separated letters, or a digit string when all letters are < 10 */
  static CircularPermutation parse(const std::string& text);

  int letter_count() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  std::string str() const;

  friend bool operator==(const CircularPermutation& a, const CircularPermutation& b) = default;
  friend bool operator<(const CircularPermutation& a, const CircularPermutation& b) {
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
};

/* positions i (cyclically) with w_i > w_{i+1}; a full circuit always wraps,
   so every circular word has at least one */
int cyclic_descent_count(const CircularPermutation& c);

/* add s to every letter modulo the alphabet size */
CircularPermutation shift_letters(const CircularPermutation& c, long s);

/* entries in [0, bound) */
class BoundedComposition {
 public:
  BoundedComposition(std::vector<int> entries, int bound);
  int size() const { return static_cast<int>(entries_.size()); }
  int bound() const { return bound_; }
  const std::vector<int>& entries() const { return entries_; }
  long sum() const;
  friend bool operator==(const BoundedComposition& a, const BoundedComposition& b) = default;

 private:
  std::vector<int> entries_;
  int bound_;
};

/* permutations of {1..n} with exactly k descents, by the two-term recurrence */
Integer eulerian(int n, long k);

/* same count by exhaustive enumeration; intended for n <= 8 */
Integer eulerian_by_enumeration(int n, long k);

/* circular words on {0..n} with k+1 cyclic descents that are fixed by adding
   (n+1)/d to every letter; requires d | n+1 */
Integer refined_eulerian(int n, long k, int d);

/* the witnesses behind refined_eulerian, lexicographically sorted */
std::vector<CircularPermutation> list_fixed_circular(int n, long k, int d);

/* one pass over all canonical words of {0..n}: bucket the shift-fixed ones
   by descent count k (key k has words with k+1 cyclic descents) */
std::vector<std::vector<CircularPermutation>> list_fixed_by_descents(int n, int d);

/* number of length-n integer vectors with entries in [0, d) summing to s */
Integer composition_count(int n, long s, int d);

/* the same count as refined_eulerian(d*n - 1, c - 1, d), but assembled from
   plain Eulerian numbers and bounded compositions; requires gcd(c, d) = 1
   and 0 < c < d*n */
Integer refined_eulerian_via_pairs(int n, long c, int d);

}  // namespace eulervol
