#include "eulervol/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace eulervol {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

int grevlex_compare(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exponent vectors of different length");
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

MultiPoly::MultiPoly(int var_count) : var_count_(var_count) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int var_count, const Rational& c) {
  MultiPoly p(var_count);
  p.add_term(Exponents(var_count, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int var_count, int index) {
  if (index < 0 || index >= var_count)
    throw std::invalid_argument("variable index out of range");
  MultiPoly p(var_count);
  Exponents e(var_count, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Rational& c) {
  MultiPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != var_count_)
    throw std::invalid_argument("exponent vector length does not match variable count");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  if (static_cast<int>(e.size()) != var_count_)
    throw std::invalid_argument("exponent vector length does not match variable count");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponents> MultiPoly::support() const {
  std::vector<Exponents> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.push_back(it->first);
  return out;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != var_count_)
    throw std::invalid_argument("evaluation point length does not match variable count");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < var_count_; ++i)
      if (e[i] != 0) term *= pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(var_count_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.var_count_ != b.var_count_)
    throw std::invalid_argument("variable-count mismatch");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (a.var_count_ != b.var_count_)
    throw std::invalid_argument("variable-count mismatch");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.var_count_ != b.var_count_)
    throw std::invalid_argument("variable-count mismatch");
  MultiPoly out(a.var_count_);
  Exponents e(a.var_count_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.var_count_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly out(p.var_count_);
  if (c.is_zero()) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != var_count_)
    throw std::invalid_argument("name list length does not match variable count");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (int i = 0; i < var_count_; ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1) factors.push_back(names[i]);
      else factors.push_back(names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << mag.str() << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

std::string MultiPoly::str() const { return str(default_variable_names(var_count_)); }

std::vector<std::string> default_variable_names(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back("x_" + std::to_string(i));
  return names;
}

}  // namespace eulervol
