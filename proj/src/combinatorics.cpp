#include "eulervol/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eulervol/errors.hpp"

namespace eulervol {

namespace {

/* alphabet sizes beyond this make (n)! enumeration hopeless */
constexpr int kMaxEnumeration = 12;

void check_is_permutation(const std::vector<int>& word, int lo, const char* what) {
  std::vector<bool> seen(word.size(), false);
  for (int v : word) {
    const int idx = v - lo;
    if (idx < 0 || idx >= static_cast<int>(word.size()) || seen[idx])
      throw std::invalid_argument(std::string(what) + ": not a permutation word");
    seen[idx] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("permutation: empty word");
  check_is_permutation(word_, 1, "permutation");
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation: size must be positive");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int descent_count(const Permutation& w) {
  int k = 0;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.word()[i] > w.word()[i + 1]) ++k;
  return k;
}

CircularPermutation::CircularPermutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("circular word: empty");
  check_is_permutation(word_, 0, "circular word");
  auto zero = std::find(word_.begin(), word_.end(), 0);
  std::rotate(word_.begin(), zero, word_.end());
}

CircularPermutation CircularPermutation::parse(const std::string& text) {
  std::vector<int> word;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("circular word: expected digits or a comma-separated list");
      word.push_back(ch - '0');
    }
  } else {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        std::size_t used = 0;
        word.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("circular word: bad letter '" + item + "'");
      }
    }
  }
  return CircularPermutation(std::move(word));
}

std::string CircularPermutation::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) os << ",";
    os << word_[i];
  }
  return os.str();
}

int cyclic_descent_count(const CircularPermutation& c) {
  const auto& w = c.word();
  const int L = c.letter_count();
  if (L == 1) return 1;
  int k = 0;
  for (int i = 0; i < L; ++i)
    if (w[i] > w[(i + 1) % L]) ++k;
  return k;
}

CircularPermutation shift_letters(const CircularPermutation& c, long s) {
  const int L = c.letter_count();
  const int r = static_cast<int>(((s % L) + L) % L);
  std::vector<int> w(c.word());
  for (int& v : w) v = (v + r) % L;
  return CircularPermutation(std::move(w));
}

BoundedComposition::BoundedComposition(std::vector<int> entries, int bound)
    : entries_(std::move(entries)), bound_(bound) {
  if (bound < 1) throw std::invalid_argument("composition: bound must be positive");
  for (int e : entries_)
    if (e < 0 || e >= bound)
      throw std::invalid_argument("composition: entry out of [0, bound)");
}

long BoundedComposition::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

Integer eulerian(int n, long k) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be positive");
  if (k < 0 || k >= n) return 0;

  static std::mutex mutex;
  static std::vector<std::vector<Integer>> rows = {{}, {1}};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(rows.size()) <= n) {
    const int m = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<Integer> row(m);
    for (int j = 0; j < m; ++j) {
      Integer v = 0;
      if (j < m - 1) v += (j + 1) * prev[j];
      if (j > 0) v += (m - j) * prev[j - 1];
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Integer eulerian_by_enumeration(int n, long k) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be positive");
  if (n > kMaxEnumeration) throw CapExceeded("eulerian enumeration cap exceeded");
  if (k < 0 || k >= n) return 0;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  Integer count = 0;
  do {
    int desc = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) ++desc;
    if (desc == k) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

namespace {

/* enumerate canonical circular words of {0..n}; report each word with k+1
   cyclic descents that is fixed by adding s = (n+1)/d to every letter */
template <typename Fn>
void for_each_fixed_word(int n, int d, Fn&& fn) {
  const int L = n + 1;
  const int s = L / d;
  std::vector<int> w(L);
  std::iota(w.begin(), w.end(), 0);
  const int pre = (L - s) % L;  // the letter that becomes 0 after the shift
  do {
    // compare the canonical rotation of the letter-shifted word in place
    int pos0 = 0;
    for (int i = 0; i < L; ++i)
      if (w[i] == pre) { pos0 = i; break; }
    bool fixed = true;
    for (int i = 0; i < L && fixed; ++i)
      fixed = (w[(pos0 + i) % L] + s) % L == w[i];
    if (fixed) {
      int desc = 0;
      for (int i = 0; i < L; ++i)
        if (w[i] > w[(i + 1) % L]) ++desc;
      fn(w, desc - 1);
    }
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

void check_refined_args(int n, int d) {
  if (n < 1) throw std::invalid_argument("refined eulerian: n must be positive");
  if (d < 1 || (n + 1) % d != 0)
    throw std::invalid_argument("refined eulerian: d must divide n+1");
  if (n + 1 > kMaxEnumeration)
    throw CapExceeded("refined eulerian enumeration cap exceeded");
}

}  // namespace

Integer refined_eulerian(int n, long k, int d) {
  check_refined_args(n, d);
  if (k < 0 || k >= n) return 0;

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, d});
  if (it == cache.end()) {
    std::vector<Integer> counts(n, 0);
    for_each_fixed_word(n, d, [&](const std::vector<int>&, int kk) { ++counts[kk]; });
    it = cache.emplace(std::make_pair(n, d), std::move(counts)).first;
  }
  return it->second[k];
}

std::vector<CircularPermutation> list_fixed_circular(int n, long k, int d) {
  check_refined_args(n, d);
  std::vector<CircularPermutation> out;
  if (k < 0 || k >= n) return out;
  for_each_fixed_word(n, d, [&](const std::vector<int>& w, int kk) {
    if (kk == k) out.emplace_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<CircularPermutation>> list_fixed_by_descents(int n, int d) {
  check_refined_args(n, d);
  std::vector<std::vector<CircularPermutation>> buckets(n);
  for_each_fixed_word(n, d, [&](const std::vector<int>& w, int kk) {
    buckets[kk].emplace_back(w);
  });
  for (auto& b : buckets) std::sort(b.begin(), b.end());
  return buckets;
}

Integer composition_count(int n, long s, int d) {
  if (n < 0) throw std::invalid_argument("composition count: negative length");
  if (d < 1) throw std::invalid_argument("composition count: bound must be positive");
  if (s < 0 || s > static_cast<long>(n) * (d - 1)) return 0;
  std::vector<Integer> dp(s + 1, 0);
  dp[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next(s + 1, 0);
    for (long t = 0; t <= s; ++t)
      for (long j = 0; j <= std::min<long>(d - 1, t); ++j)
        next[t] += dp[t - j];
    dp = std::move(next);
  }
  return dp[s];
}

Integer refined_eulerian_via_pairs(int n, long c, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("refined via pairs: n and d must be positive");
  if (std::gcd(c, static_cast<long>(d)) != 1)
    throw std::invalid_argument("refined via pairs: c and d must be coprime");
  if (c <= 0 || c >= static_cast<long>(d) * n)
    throw std::invalid_argument("refined via pairs: c out of (0, d*n)");
  if (n == 1) return composition_count(1, c - 1, d);
  Integer total = 0;
  for (int k = 1; k <= n - 1; ++k)
    total += eulerian(n - 1, k - 1) * composition_count(n, c - k, d);
  return total;
}

}  // namespace eulervol
