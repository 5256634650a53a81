#include "eulervol/rational.hpp"

namespace eulervol {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial upper index must be non-negative");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long mod_inverse(long a, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 0;
  long r0 = m, r1 = ((a % m) + m) % m;
  long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("no modular inverse: arguments not coprime");
  return ((t0 % m) + m) % m;
}

Rational Rational::parse(const std::string& text) {
  auto trim = [](const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto check_digits = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string t = trim(text);
  const auto slash = t.find('/');
  const std::string num_text = trim(slash == std::string::npos ? t : t.substr(0, slash));
  const std::string den_text = slash == std::string::npos ? "1" : trim(t.substr(slash + 1));
  if (!check_digits(num_text) || !check_digits(den_text))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  return Rational(Integer(num_text), Integer(den_text));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e == 0) return 1;
  if (r.is_zero()) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return 0;
  }
  Rational base = e < 0 ? Rational(1) / r : r;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Rational acc = 1;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace eulervol
