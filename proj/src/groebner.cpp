#include "eulervol/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "eulervol/combinatorics.hpp"
#include "eulervol/errors.hpp"
#include "eulervol/laurent.hpp"

namespace eulervol {

namespace {

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

MultiPoly times_monomial(const MultiPoly& p, const Exponents& shift, const Rational& c) {
  MultiPoly out(p.var_count());
  Exponents e(p.var_count());
  for (const auto& [exps, coeff] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps[i] + shift[i];
    out.add_term(e, coeff * c);
  }
  return out;
}

/* scale to integer coefficients with content 1 and positive leading
   coefficient; a scalar multiple generates the same ideal */
MultiPoly remove_content(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [exps, coeff] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.denominator().get_mpz_t());
  }
  Rational scalar(den_lcm, num_gcd);
  if (p.coefficient(order.leading_exponents(p)).sign() < 0) scalar = -scalar;
  return scalar * p;
}

MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& order) {
  const Rational lc = p.coefficient(order.leading_exponents(p));
  return (Rational(1) / lc) * p;
}

struct DivisionTable {
  std::vector<const MultiPoly*> polys;
  std::vector<Exponents> lms;
  std::vector<Rational> lcs;

  void add(const MultiPoly& p, const MonomialOrder& order) {
    polys.push_back(&p);
    lms.push_back(order.leading_exponents(p));
    lcs.push_back(p.coefficient(lms.back()));
  }
};

MultiPoly reduce_by_table(const MultiPoly& p, const DivisionTable& table,
                          const MonomialOrder& order) {
  MultiPoly h = p;
  MultiPoly remainder(p.var_count());
  Exponents quotient(p.var_count());
  while (!h.is_zero()) {
    const Exponents lt = order.leading_exponents(h);
    const Rational c = h.coefficient(lt);
    bool reduced = false;
    for (std::size_t i = 0; i < table.polys.size(); ++i) {
      if (!monomial_divides(table.lms[i], lt)) continue;
      for (std::size_t v = 0; v < quotient.size(); ++v)
        quotient[v] = lt[v] - table.lms[i][v];
      h = h - times_monomial(*table.polys[i], quotient, c / table.lcs[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt, c);
      h.add_term(lt, -c);
    }
  }
  return remainder;
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {}

MonomialOrder MonomialOrder::grevlex(int var_count) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  std::vector<int> ranking(var_count);
  std::iota(ranking.begin(), ranking.end(), 0);
  return MonomialOrder(std::move(ranking));
}

MonomialOrder MonomialOrder::grevlex_ranked(const std::vector<int>& variable_ranking) {
  const int n = static_cast<int>(variable_ranking.size());
  std::vector<char> seen(n, 0);
  for (int v : variable_ranking) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("ranking must be a permutation of the variables");
    seen[v] = 1;
  }
  return MonomialOrder(variable_ranking);
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (static_cast<int>(a.size()) != var_count() ||
      static_cast<int>(b.size()) != var_count())
    throw std::invalid_argument("exponent length does not match the order");
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int j = var_count() - 1; j >= 0; --j) {
    const int diff = a[ranking_[j]] - b[ranking_[j]];
    // the smaller entry at the last ranked difference wins
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

Exponents MonomialOrder::leading_exponents(const MultiPoly& p) const {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  bool identity = true;
  for (int j = 0; j < var_count(); ++j)
    if (ranking_[j] != j) { identity = false; break; }
  if (identity) return p.terms().rbegin()->first;  // stored order is plain grevlex
  const Exponents* best = nullptr;
  for (const auto& [exps, coeff] : p.terms())
    if (best == nullptr || compare(exps, *best) > 0) best = &exps;
  return *best;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order) {
  if (p.var_count() != order.var_count())
    throw std::invalid_argument("polynomial does not match the order");
  DivisionTable table;
  for (const MultiPoly& g : basis) {
    if (g.var_count() != p.var_count())
      throw std::invalid_argument("basis polynomial over a different variable set");
    if (!g.is_zero()) table.add(g, order);
  }
  return reduce_by_table(p, table, order);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s-polynomial of a zero polynomial");
  const Exponents lf = order.leading_exponents(f);
  const Exponents lg = order.leading_exponents(g);
  const Exponents l = monomial_lcm(lf, lg);
  Exponents sf(lf.size()), sg(lg.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - lf[i];
    sg[i] = l[i] - lg[i];
  }
  return times_monomial(f, sf, Rational(1) / f.coefficient(lf)) -
         times_monomial(g, sg, Rational(1) / g.coefficient(lg));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerLimits& limits) {
  if (order.var_count() != ideal.var_count)
    throw std::invalid_argument("order does not match the ideal's variable count");

  GroebnerBasis unit{order, {MultiPoly::constant(ideal.var_count, 1)}};

  std::vector<MultiPoly> elems;
  for (const MultiPoly& g : ideal.generators) {
    if (g.var_count() != ideal.var_count)
      throw std::invalid_argument("generator over a different variable set");
    if (g.is_zero()) continue;
    if (g.degree() == 0) return unit;
    elems.push_back(remove_content(g, order));
  }
  if (elems.empty()) return GroebnerBasis{order, {}};

  std::vector<Exponents> lms;
  for (const MultiPoly& e : elems) lms.push_back(order.leading_exponents(e));

  std::set<std::tuple<int, int, int>> queue;  // (lcm degree, j, i) with i < j
  std::set<std::pair<int, int>> pending;
  const auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      queue.insert({total_degree(monomial_lcm(lms[i], lms[t])), t, i});
      pending.insert({i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(elems.size()); ++t) push_pairs(t);

  long processed = 0;
  while (!queue.empty()) {
    const auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (++processed > limits.max_pairs)
      throw CapExceeded("s-pair budget exhausted");

    const Exponents lcm_ij = monomial_lcm(lms[i], lms[j]);

    // coprime leading terms: the s-polynomial reduces to zero
    bool coprime = true;
    for (std::size_t v = 0; v < lcm_ij.size(); ++v)
      if (lms[i][v] > 0 && lms[j][v] > 0) { coprime = false; break; }
    if (coprime) continue;

    // chain criterion: a third element divides the lcm and both of its pairs
    // with i and j have already been handled
    bool chained = false;
    for (int k = 0; k < static_cast<int>(elems.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!monomial_divides(lms[k], lcm_ij)) continue;
      const std::pair<int, int> ik{std::min(i, k), std::max(i, k)};
      const std::pair<int, int> jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) chained = true;
    }
    if (chained) continue;

    DivisionTable table;
    for (const MultiPoly& e : elems) table.add(e, order);
    MultiPoly r = reduce_by_table(s_polynomial(elems[i], elems[j], order), table, order);
    if (r.is_zero()) continue;
    if (r.degree() == 0) return unit;
    r = remove_content(r, order);
    const Exponents lm = order.leading_exponents(r);
    if (total_degree(lm) > limits.max_degree)
      throw CapExceeded("basis element degree above the budget");
    elems.push_back(std::move(r));
    lms.push_back(lm);
    push_pairs(static_cast<int>(elems.size()) - 1);
  }

  // interreduce: drop covered leading monomials, then fully reduce tails
  std::vector<int> idx(elems.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return order.less(lms[a], lms[b]); });
  std::vector<MultiPoly> kept;
  std::vector<Exponents> kept_lms;
  for (int id : idx) {
    bool covered = false;
    for (const Exponents& l : kept_lms)
      if (monomial_divides(l, lms[id])) { covered = true; break; }
    if (!covered) {
      kept.push_back(elems[id]);
      kept_lms.push_back(lms[id]);
    }
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    DivisionTable others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.add(kept[j], order);
    kept[i] = make_monic(reduce_by_table(kept[i], others, order), order);
  }
  return GroebnerBasis{order, std::move(kept)};
}

bool is_unit(const GroebnerBasis& g) {
  return g.elements.size() == 1 && g.elements[0].degree() == 0;
}

bool is_zero_dimensional(const GroebnerBasis& g) {
  if (is_unit(g)) return true;
  const int vars = g.order.var_count();
  std::vector<char> covered(vars, 0);
  for (const MultiPoly& e : g.elements) {
    const Exponents lm = g.order.leading_exponents(e);
    int support = -1;
    bool pure = true;
    for (int v = 0; v < vars; ++v) {
      if (lm[v] == 0) continue;
      if (support >= 0) { pure = false; break; }
      support = v;
    }
    if (pure && support >= 0) covered[support] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return g.elements.empty() ? vars == 0 : true;
}

long ideal_degree(const GroebnerBasis& g) {
  if (is_unit(g)) return 0;
  if (!is_zero_dimensional(g))
    throw std::domain_error("ideal is not zero-dimensional");
  const int vars = g.order.var_count();
  std::vector<Exponents> lms;
  for (const MultiPoly& e : g.elements) lms.push_back(g.order.leading_exponents(e));

  // pure-power bounds box every standard monomial
  std::vector<int> bound(vars, 0);
  for (const Exponents& lm : lms) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < vars; ++v) {
      if (lm[v] == 0) continue;
      if (support >= 0) { pure = false; break; }
      support = v;
    }
    if (pure && support >= 0 &&
        (bound[support] == 0 || lm[support] < bound[support]))
      bound[support] = lm[support];
  }

  long count = 0;
  Exponents e(vars, 0);
  const auto walk = [&](const auto& self, int v) -> void {
    if (v == vars) {
      for (const Exponents& lm : lms)
        if (monomial_divides(lm, e)) return;
      ++count;
      return;
    }
    for (int x = 0; x < bound[v]; ++x) {
      e[v] = x;
      self(self, v + 1);
    }
    e[v] = 0;
  };
  walk(walk, 0);
  return count;
}

namespace {

TheoremReport run_engine(TheoremReport report, const Ideal& ideal,
                         const std::vector<std::string>& names,
                         const BuchbergerLimits& limits) {
  for (const MultiPoly& g : ideal.generators)
    report.generator_text.push_back(g.str(names));
  const auto start = std::chrono::steady_clock::now();
  try {
    const GroebnerBasis basis = buchberger(ideal, MonomialOrder::grevlex(ideal.var_count), limits);
    report.basis_size = static_cast<int>(basis.elements.size());
    report.unit_ideal = is_unit(basis);
    report.zero_dimensional = is_zero_dimensional(basis);
    if (report.zero_dimensional) {
      report.degree = ideal_degree(basis);
      report.match = Integer(report.degree) == report.expected;
    }
  } catch (const CapExceeded&) {
    report.cap_exceeded = true;
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

TheoremReport verify_theorem1(int m, int n, const BuchbergerLimits& limits) {
  if (m < 1 || n < 1) throw std::invalid_argument("window needs m, n >= 1");
  if (m + n > 6) throw CapExceeded("window width above the supported range");
  const int N = m + n;
  TheoremReport report;
  report.m = m;
  report.n = n;
  report.d = 1;
  report.expected = eulerian(N - 1, m - 1);
  Ideal ideal;
  ideal.var_count = N - 1;
  ideal.generators = power_constant_terms(m, n, N - 1);
  ideal.variable_names = coefficient_variable_names(m, n);
  return run_engine(std::move(report), ideal, ideal.variable_names, limits);
}

TheoremReport verify_theorem5(int m, int n, int d, const BuchbergerLimits& limits) {
  const SparseFamilySpec spec(m, n, d);  // validates d | m+n
  const int N = m + n;
  if (N > 8 || N / d > 6) throw CapExceeded("sparse family above the supported range");
  TheoremReport report;
  report.m = m;
  report.n = n;
  report.d = d;
  report.expected = refined_eulerian(N - 1, m - 1, d);
  const SparseGenerators gens = sparse_generators(spec);
  Ideal ideal;
  ideal.var_count = static_cast<int>(gens.variable_exponents.size());
  ideal.generators = gens.generators;
  ideal.variable_names = sparse_variable_names(gens.variable_exponents);
  return run_engine(std::move(report), ideal, ideal.variable_names, limits);
}

}  // namespace eulervol
