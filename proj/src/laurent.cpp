#include "eulervol/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulervol {

namespace {

void check_window(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("laurent window needs m >= 1 and n >= 1");
}

}  // namespace

LaurentPoly::LaurentPoly(int low, int high, int var_count)
    : low_(low), high_(high), var_count_(var_count), zero_(var_count) {}

LaurentPoly LaurentPoly::generic(int m, int n) {
  check_window(m, n);
  const int vars = m + n - 1;
  LaurentPoly f(-m, n, vars);
  f.coeffs_.emplace(-m, MultiPoly::constant(vars, 1));
  f.coeffs_.emplace(n, MultiPoly::constant(vars, 1));
  for (int e = -m + 1; e <= n - 1; ++e)
    f.coeffs_.emplace(e, MultiPoly::variable(vars, e + m - 1));
  return f;
}

LaurentPoly LaurentPoly::numeric(int m, int n, const std::vector<Rational>& middle) {
  check_window(m, n);
  if (static_cast<int>(middle.size()) != m + n - 1)
    throw std::invalid_argument("numeric window needs exactly m+n-1 middle coefficients");
  LaurentPoly f(-m, n, 0);
  f.coeffs_.emplace(-m, MultiPoly::constant(0, 1));
  f.coeffs_.emplace(n, MultiPoly::constant(0, 1));
  for (int e = -m + 1; e <= n - 1; ++e) {
    const Rational& c = middle[e + m - 1];
    if (!c.is_zero()) f.coeffs_.emplace(e, MultiPoly::constant(0, c));
  }
  return f;
}

LaurentPoly LaurentPoly::sparse_generic(int m, int n, int d) {
  check_window(m, n);
  if (d < 1) throw std::invalid_argument("sparsity modulus must be positive");
  const std::vector<int> exps = sparse_variable_exponents(m, n, d);
  const int vars = static_cast<int>(exps.size());
  LaurentPoly f(-m, n, vars);
  f.coeffs_.emplace(-m, MultiPoly::constant(vars, 1));
  f.coeffs_.emplace(n, MultiPoly::constant(vars, 1));
  for (int i = 0; i < vars; ++i)
    f.coeffs_.emplace(exps[i], MultiPoly::variable(vars, i));
  return f;
}

const MultiPoly& LaurentPoly::coefficient(int exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? zero_ : it->second;
}

std::vector<int> LaurentPoly::support() const {
  std::vector<int> out;
  for (const auto& [e, c] : coeffs_)
    if (!c.is_zero()) out.push_back(e);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (var_count_ != other.var_count_)
    throw std::invalid_argument("laurent product over different variable sets");
  LaurentPoly out(low_ + other.low_, high_ + other.high_, var_count_);
  for (const auto& [ea, ca] : coeffs_) {
    if (ca.is_zero()) continue;
    for (const auto& [eb, cb] : other.coeffs_) {
      if (cb.is_zero()) continue;
      const MultiPoly prod = ca * cb;
      auto it = out.coeffs_.find(ea + eb);
      if (it == out.coeffs_.end())
        out.coeffs_.emplace(ea + eb, prod);
      else
        it->second = it->second + prod;
    }
  }
  return out;
}

std::vector<MultiPoly> laurent_power_constant_terms(const LaurentPoly& f, int K) {
  if (K < 1) throw std::invalid_argument("need at least one power");
  std::vector<MultiPoly> out;
  out.reserve(K);
  LaurentPoly power = f;
  out.push_back(power.coefficient(0));
  for (int k = 2; k <= K; ++k) {
    power = power * f;
    out.push_back(power.coefficient(0));
  }
  return out;
}

std::vector<MultiPoly> power_constant_terms(int m, int n, int K) {
  return laurent_power_constant_terms(LaurentPoly::generic(m, n), K);
}

std::vector<Rational> constant_terms_numeric(const std::vector<Rational>& middle,
                                             int m, int n, int K) {
  const LaurentPoly f = LaurentPoly::numeric(m, n, middle);
  std::vector<Rational> out;
  for (const MultiPoly& p : laurent_power_constant_terms(f, K))
    out.push_back(p.coefficient(Exponents{}));
  return out;
}

RootSystemSpec::RootSystemSpec(int m_, int N_, int k_) : m(m_), N(N_), k(k_) {
  if (m <= 0 || m >= N) throw std::invalid_argument("root system needs 0 < m < N");
  if (k < 1 || k > N - 1) throw std::invalid_argument("root system needs 1 <= k <= N-1");
}

MultiPoly pk_polynomial(int m, int N, int k) {
  const RootSystemSpec spec(m, N, k);
  MultiPoly out(N);
  Exponents a(N, 0);
  // enumerate 0 <= a_i <= k with sum m*k, tracking the binomial product
  const auto descend = [&](const auto& self, int index, int remaining,
                           const Integer& coeff) -> void {
    if (index == N - 1) {
      if (remaining > k) return;
      a[index] = remaining;
      const Integer c = coeff * binomial(k, remaining);
      out.add_term(a, Rational(c));
      return;
    }
    const int rest_capacity = (N - 1 - index) * k;
    for (int v = 0; v <= k && v <= remaining; ++v) {
      if (remaining - v > rest_capacity) continue;
      a[index] = v;
      self(self, index + 1, remaining - v, coeff * binomial(k, v));
    }
  };
  descend(descend, 0, spec.m * spec.k, 1);
  return out;
}

MultiPoly pk_expand_oracle(int m, int N, int k) {
  const RootSystemSpec spec(m, N, k);
  const int target = spec.m * spec.k;
  // coefficients of z^0..z^target of the growing product of linear factors;
  // higher powers of z can never fall back down, so they are discarded
  std::vector<MultiPoly> coeff(target + 1, MultiPoly(N));
  coeff[0] = MultiPoly::constant(N, 1);
  for (int i = 0; i < N; ++i) {
    const MultiPoly r = MultiPoly::variable(N, i);
    for (int rep = 0; rep < k; ++rep)
      for (int deg = target; deg >= 1; --deg)
        coeff[deg] = coeff[deg] + r * coeff[deg - 1];
  }
  return coeff[target];
}

std::vector<Exponents> newton_support(const MultiPoly& p) {
  std::vector<Exponents> out = p.support();
  std::sort(out.begin(), out.end());
  return out;
}

SparseFamilySpec::SparseFamilySpec(int m_, int n_, int d_) : m(m_), n(n_), d(d_) {
  if (m < 1 || n < 1) throw std::invalid_argument("sparse family needs m, n >= 1");
  if (d < 1) throw std::invalid_argument("sparse family needs d >= 1");
  if ((m + n) % d != 0)
    throw std::invalid_argument("sparsity modulus must divide m+n");
}

std::vector<int> sparse_variable_exponents(int m, int n, int d) {
  check_window(m, n);
  if (d < 1) throw std::invalid_argument("sparsity modulus must be positive");
  std::vector<int> out;
  for (int e = -m + 1; e <= n - 1; ++e)
    if (((e - n) % d + d) % d == 0) out.push_back(e);
  return out;
}

SparseGenerators sparse_generators(const SparseFamilySpec& spec) {
  const int N = spec.m + spec.n;
  SparseGenerators out;
  out.variable_exponents = sparse_variable_exponents(spec.m, spec.n, spec.d);
  const LaurentPoly f = LaurentPoly::sparse_generic(spec.m, spec.n, spec.d);
  const std::vector<MultiPoly> terms = laurent_power_constant_terms(f, N - 1);
  for (int k = 1; k <= N - 1; ++k) {
    if ((spec.m * k) % spec.d == 0) {
      out.kept_k.push_back(k);
      out.generators.push_back(terms[k - 1]);
    } else {
      if (!terms[k - 1].is_zero())
        throw std::logic_error("sparse constant term expected to vanish");
      out.dropped_k.push_back(k);
    }
  }
  return out;
}

std::vector<std::string> coefficient_variable_names(int m, int n) {
  check_window(m, n);
  std::vector<std::string> out;
  for (int e = -m + 1; e <= n - 1; ++e) out.push_back("a_" + std::to_string(e));
  return out;
}

std::vector<std::string> sparse_variable_names(const std::vector<int>& exponents) {
  std::vector<std::string> out;
  for (int e : exponents) out.push_back("b_" + std::to_string(e));
  return out;
}

std::vector<std::string> root_variable_names(int N) {
  std::vector<std::string> out;
  for (int i = 1; i <= N; ++i) out.push_back("r_" + std::to_string(i));
  return out;
}

}  // namespace eulervol
