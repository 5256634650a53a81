#include "eulervol/bijection.hpp"

#include <numeric>
#include <stdexcept>

namespace eulervol {

PairWX::PairWX(int n, int d, std::vector<int> w, std::vector<int> x)
    : n_(n), d_(d), w_(std::move(w)), x_(std::move(x)) {
  if (n < 1) throw std::invalid_argument("pair: n must be positive");
  if (d < 1) throw std::invalid_argument("pair: d must be positive");
  if (static_cast<int>(w_.size()) != n || static_cast<int>(x_.size()) != n)
    throw std::invalid_argument("pair: w and x must both have length n");
  if (w_[0] != 0) throw std::invalid_argument("pair: w must start with 0");
  std::vector<bool> seen(n, false);
  for (int v : w_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("pair: w is not a permutation word of {0..n-1}");
    seen[v] = true;
  }
  for (int e : x_)
    if (e < 0 || e >= d)
      throw std::invalid_argument("pair: x entry out of [0, d)");
  const long c = derived_c();
  if (c <= 0 || c >= static_cast<long>(d) * n)
    throw std::invalid_argument("pair: derived statistic c out of (0, d*n)");
}

int PairWX::circular_descents() const {
  if (n_ == 1) return 1;
  int k = 0;
  for (int i = 0; i < n_; ++i)
    if (w_[i] > w_[(i + 1) % n_]) ++k;
  return k;
}

long PairWX::derived_c() const {
  return circular_descents() + std::accumulate(x_.begin(), x_.end(), 0L);
}

PSequence build_p_sequence(const PairWX& pair, int count) {
  if (count < 1) throw std::invalid_argument("p-sequence: count must be positive");
  const int n = pair.n();
  PSequence p;
  p.n = n;
  p.c = pair.derived_c();
  p.terms.reserve(count);
  p.terms.push_back(0);
  for (int i = 1; i < count; ++i) {
    const long prev = p.terms.back();
    const int wi = pair.w()[i % n];
    const int xi = pair.x()[(i - 1) % n];
    long r = (wi - prev) % n;
    if (r <= 0) r += n;
    p.terms.push_back(prev + static_cast<long>(n) * xi + r);
  }
  return p;
}

CircularPermutation pair_to_circular(const PairWX& pair) {
  const long c = pair.derived_c();
  const long dn = static_cast<long>(pair.d()) * pair.n();
  if (std::gcd(c, static_cast<long>(pair.d())) != 1)
    throw std::domain_error(
        "pair: derived statistic shares a factor with d, so the reduction "
        "modulo d*n is not a permutation");
  const PSequence p = build_p_sequence(pair, static_cast<int>(dn));
  std::vector<int> word;
  word.reserve(dn);
  for (long t : p.terms) word.push_back(static_cast<int>(t % dn));
  return CircularPermutation(std::move(word));
}

InverseResult circular_to_pair(const CircularPermutation& word, int n, int d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("inverse: n and d must be positive");
  const long dn = static_cast<long>(d) * n;
  if (word.letter_count() != dn)
    throw std::invalid_argument("inverse: word must have d*n letters");
  const long c = cyclic_descent_count(word);
  if (std::gcd(c, static_cast<long>(d)) != 1)
    throw std::domain_error("inverse: descent count shares a factor with d");
  if (shift_letters(word, n) != word)
    throw std::domain_error("inverse: word is not fixed under shifting letters by n");

  // rebuild the p-prefix: each step advances to the next value congruent to
  // the following letter modulo d*n
  std::vector<long> p(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int target = word.word()[i % dn];
    long r = (target - p[i - 1]) % dn;
    if (r <= 0) r += dn;
    p[i] = p[i - 1] + r;
  }

  std::vector<int> w(n), x(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<int>(p[i] % n);
  for (int i = 1; i <= n; ++i) {
    const int wi = static_cast<int>(p[i] % n);
    const long crossings = p[i] / n - p[i - 1] / n;
    x[i - 1] = static_cast<int>(crossings - (w[i - 1] >= wi ? 1 : 0));
    if (x[i - 1] < 0 || x[i - 1] >= d)
      throw std::domain_error("inverse: word is not in the image (recovered x out of range)");
  }

  InverseResult out{PairWX(n, d, std::move(w), std::move(x)), c, 0};
  if (pair_to_circular(out.pair) != word)
    throw std::domain_error("inverse: word is not in the image");
  out.c_prime = d == 1 ? 0 : mod_inverse(c, d);
  return out;
}

}  // namespace eulervol
