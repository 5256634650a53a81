#include "eulervol/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulervol/bijection.hpp"
#include "eulervol/combinatorics.hpp"
#include "eulervol/errors.hpp"
#include "eulervol/groebner.hpp"
#include "eulervol/laurent.hpp"
#include "eulervol/polytope.hpp"

namespace eulervol::cli {

namespace {

using nlohmann::json;  // std::map-backed: keys serialize alphabetically

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

long env_long(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid value for ") + name);
  }
}

BuchbergerLimits env_buchberger_limits() {
  BuchbergerLimits limits;
  limits.max_pairs = env_long("EULERVOL_MAX_PAIRS", limits.max_pairs);
  limits.max_degree = static_cast<int>(env_long("EULERVOL_MAX_DEGREE", limits.max_degree));
  return limits;
}

HullOptions env_hull_options() {
  HullOptions options;
  options.max_points =
      static_cast<int>(env_long("EULERVOL_MAX_HULL_POINTS", options.max_points));
  return options;
}

json vertices_json(const VPolytope& p) {
  json rows = json::array();
  for (const Point& v : p.vertices()) {
    json row = json::array();
    for (const Rational& x : v) row.push_back(x.str());
    rows.push_back(row);
  }
  return rows;
}

json theorem_report_json(int theorem, const TheoremReport& r) {
  json doc;
  doc["theorem"] = theorem;
  doc["m"] = r.m;
  doc["n"] = r.n;
  doc["d"] = r.d;
  doc["generators"] = r.generator_text;
  doc["basis_size"] = r.basis_size;
  doc["cap_exceeded"] = r.cap_exceeded;
  doc["zero_dimensional"] = r.zero_dimensional;
  doc["unit_ideal"] = r.unit_ideal;
  doc["degree"] = r.degree;
  doc["expected"] = r.expected.get_str();
  doc["match"] = r.match;
  return doc;
}

int theorem_exit_code(const TheoremReport& r) {
  if (r.cap_exceeded) return 3;
  return r.match ? 0 : 1;
}

/* what one subcommand produced: a human line (or lines) and the same values
   as a JSON document */
struct Outcome {
  std::string human;
  json doc;
  int exit_code = 0;
  std::vector<std::string> diagnostics;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact Eulerian numbers, hypercube slices, mixed volumes, "
               "constant-term systems, and their verification suites"};
  app.name("eulervol");
  app.fallthrough(true);
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON document instead of plain lines");

  Outcome out;
  bool ran = false;
  const auto act = [&](auto body) {
    return [&, body]() {
      body();
      ran = true;
    };
  };

  // eulerian n k [--d D]
  auto* cmd_euler = app.add_subcommand(
      "eulerian", "count permutations of n letters with k descents; with --d, "
                  "the shift-invariant circular refinement");
  int eu_n = 0, eu_d = 1;
  long eu_k = 0;
  cmd_euler->add_option("n", eu_n, "letter count")->required();
  cmd_euler->add_option("k", eu_k, "descent count")->required();
  cmd_euler->add_option("--d", eu_d, "shift order (must divide n+1)")->capture_default_str();
  cmd_euler->callback(act([&] {
    const Integer v = eu_d == 1 ? eulerian(eu_n, eu_k) : refined_eulerian(eu_n, eu_k, eu_d);
    out.human = v.get_str();
    out.doc = {{"command", "eulerian"},
               {"n", eu_n},
               {"k", eu_k},
               {"d", eu_d},
               {"value", v.get_str()}};
  }));

  // hypersimplex k n
  auto* cmd_hyper = app.add_subcommand(
      "hypersimplex", "vertex description and normalized volume of the slice "
                      "of the unit n-cube at coordinate sum k");
  int hy_k = 0, hy_n = 0;
  cmd_hyper->add_option("k", hy_k, "coordinate sum")->required();
  cmd_hyper->add_option("n", hy_n, "cube dimension")->required();
  cmd_hyper->callback(act([&] {
    const VPolytope p = hypersimplex(hy_k, hy_n);
    const Rational nv = normalized_volume_slice(p, env_hull_options());
    out.human = "ambient_dim=" + std::to_string(p.ambient_dim()) +
                " affine_dim=" + std::to_string(p.affine_dim()) +
                " vertices=" + std::to_string(p.vertices().size()) +
                " normalized_volume=" + nv.str();
    out.doc = {{"command", "hypersimplex"},
               {"k", hy_k},
               {"n", hy_n},
               {"ambient_dim", p.ambient_dim()},
               {"affine_dim", p.affine_dim()},
               {"vertex_count", p.vertices().size()},
               {"normalized_volume", nv.str()},
               {"vertices", vertices_json(p)}};
  }));

  // slice c d n
  auto* cmd_slice = app.add_subcommand(
      "slice", "normalized volume of the dilated n-cube slice at coordinate "
               "sum c with denominator d (gcd(c,d)=1)");
  int sl_c = 0, sl_d = 0, sl_n = 0;
  cmd_slice->add_option("c", sl_c, "coordinate sum numerator")->required();
  cmd_slice->add_option("d", sl_d, "denominator / dilation")->required();
  cmd_slice->add_option("n", sl_n, "cube dimension")->required();
  cmd_slice->callback(act([&] {
    const VPolytope p = cube_slice(SliceSpec(sl_c, sl_d, sl_n));
    const Rational nv = normalized_volume_slice(p, env_hull_options());
    out.human = nv.str();
    out.doc = {{"command", "slice"},
               {"c", sl_c},
               {"d", sl_d},
               {"n", sl_n},
               {"value", nv.str()}};
  }));

  // mixed-volume --file F
  auto* cmd_mv = app.add_subcommand(
      "mixed-volume", "mixed volume of the polytopes in a JSON file: an array "
                      "of vertex documents, or one document repeated n times");
  std::string mv_file;
  cmd_mv->add_option("--file", mv_file, "path to the polytope file")->required();
  cmd_mv->callback(act([&] {
    std::ifstream in(mv_file);
    if (!in) throw std::invalid_argument("cannot read file: " + mv_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    json doc;
    try {
      doc = json::parse(buffer.str());
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    const HullOptions options = env_hull_options();
    std::vector<VPolytope> bodies;
    if (doc.is_array()) {
      for (const json& item : doc) bodies.push_back(polytope_from_text(item.dump(), options));
    } else {
      const VPolytope p = polytope_from_text(doc.dump(), options);
      bodies.assign(static_cast<std::size_t>(p.ambient_dim()), p);
    }
    const Rational v = mixed_volume(bodies, options);
    out.human = v.str();
    out.doc = {{"command", "mixed-volume"},
               {"count", bodies.size()},
               {"value", v.str()}};
  }));

  // mv-family m N
  auto* cmd_mvf = app.add_subcommand(
      "mv-family", "mixed volume of the dilated sum-k cube slices for "
                   "k=1..N-1 together with the diagonal segment");
  int mf_m = 0, mf_n = 0;
  cmd_mvf->add_option("m", mf_m, "family parameter (0 < m < N)")->required();
  cmd_mvf->add_option("N", mf_n, "ambient dimension")->required();
  cmd_mvf->callback(act([&] {
    const Integer v = mv_family(mf_m, mf_n, env_hull_options());
    out.human = v.get_str();
    out.doc = {{"command", "mv-family"}, {"m", mf_m}, {"N", mf_n}, {"value", v.get_str()}};
  }));

  // bijection forward|inverse
  auto* cmd_bij = app.add_subcommand(
      "bijection", "the pair <-> shift-invariant circular word correspondence");
  cmd_bij->require_subcommand(1);
  auto* cmd_fwd = cmd_bij->add_subcommand(
      "forward", "map a pair (w, x) to its circular word");
  int bf_n = 0, bf_d = 0;
  std::string bf_w, bf_x;
  cmd_fwd->add_option("--n", bf_n, "word length")->required();
  cmd_fwd->add_option("--d", bf_d, "entry bound for x")->required();
  cmd_fwd->add_option("--w", bf_w, "comma-separated word starting with 0")->required();
  cmd_fwd->add_option("--x", bf_x, "comma-separated entries in [0, d)")->required();
  cmd_fwd->callback(act([&] {
    const PairWX pair(bf_n, bf_d, parse_int_list(bf_w), parse_int_list(bf_x));
    const CircularPermutation word = pair_to_circular(pair);
    out.human = word.str();
    out.doc = {{"command", "bijection-forward"},
               {"n", bf_n},
               {"d", bf_d},
               {"w", pair.w()},
               {"x", pair.x()},
               {"c", pair.derived_c()},
               {"word", word.str()}};
  }));
  auto* cmd_inv = cmd_bij->add_subcommand(
      "inverse", "recover the pair (w, x) from a circular word");
  int bi_n = 0, bi_d = 0;
  std::string bi_word;
  cmd_inv->add_option("--n", bi_n, "word length of the recovered pair")->required();
  cmd_inv->add_option("--d", bi_d, "entry bound for x")->required();
  cmd_inv->add_option("--word", bi_word, "circular word (comma-separated or digits)")
      ->required();
  cmd_inv->callback(act([&] {
    const InverseResult r = circular_to_pair(CircularPermutation::parse(bi_word), bi_n, bi_d);
    out.human = "w=" + join_ints(r.pair.w()) + " x=" + join_ints(r.pair.x()) +
                " c=" + std::to_string(r.c) + " c_prime=" + std::to_string(r.c_prime);
    out.doc = {{"command", "bijection-inverse"},
               {"n", bi_n},
               {"d", bi_d},
               {"w", r.pair.w()},
               {"x", r.pair.x()},
               {"c", r.c},
               {"c_prime", r.c_prime}};
  }));

  // constant-terms m n K [--coeffs ...]
  auto* cmd_ct = app.add_subcommand(
      "constant-terms", "constant terms of the powers f^1..f^K of the doubly "
                        "monic window z^-m..z^n, generic or at given middle "
                        "coefficients");
  int ct_m = 0, ct_n = 0, ct_k = 0;
  std::string ct_coeffs;
  cmd_ct->add_option("m", ct_m, "lowest exponent magnitude")->required();
  cmd_ct->add_option("n", ct_n, "highest exponent")->required();
  cmd_ct->add_option("K", ct_k, "highest power")->required();
  cmd_ct->add_option("--coeffs", ct_coeffs,
                     "comma-separated middle coefficients (p/q), lowest exponent first");
  cmd_ct->callback(act([&] {
    json values = json::array();
    std::string human;
    if (ct_coeffs.empty()) {
      const std::vector<MultiPoly> terms = power_constant_terms(ct_m, ct_n, ct_k);
      const std::vector<std::string> names = coefficient_variable_names(ct_m, ct_n);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string text = terms[i].str(names);
        values.push_back(text);
        if (i) human += "\n";
        human += "k=" + std::to_string(i + 1) + ": " + text;
      }
      out.doc = {{"command", "constant-terms"},
                 {"m", ct_m},
                 {"n", ct_n},
                 {"K", ct_k},
                 {"variables", names},
                 {"values", values}};
    } else {
      const std::vector<Rational> middle = parse_rational_list(ct_coeffs);
      const std::vector<Rational> terms = constant_terms_numeric(middle, ct_m, ct_n, ct_k);
      json given = json::array();
      for (const Rational& c : middle) given.push_back(c.str());
      for (std::size_t i = 0; i < terms.size(); ++i) {
        values.push_back(terms[i].str());
        if (i) human += "\n";
        human += "k=" + std::to_string(i + 1) + ": " + terms[i].str();
      }
      out.doc = {{"command", "constant-terms"},
                 {"m", ct_m},
                 {"n", ct_n},
                 {"K", ct_k},
                 {"coeffs", given},
                 {"values", values}};
    }
    out.human = human;
  }));

  // pk m N k
  auto* cmd_pk = app.add_subcommand(
      "pk", "coefficient polynomial of z^0 in prod_i (1 + r_i z)^k restricted "
            "to total degree m*k, as a polynomial in r_1..r_N");
  int pk_m = 0, pk_n = 0, pk_k = 0;
  cmd_pk->add_option("m", pk_m, "balance parameter (0 < m < N)")->required();
  cmd_pk->add_option("N", pk_n, "variable count")->required();
  cmd_pk->add_option("k", pk_k, "power (1 <= k <= N-1)")->required();
  cmd_pk->callback(act([&] {
    const MultiPoly p = pk_polynomial(pk_m, pk_n, pk_k);
    const std::string text = p.str(root_variable_names(pk_n));
    out.human = text;
    out.doc = {{"command", "pk"},
               {"m", pk_m},
               {"N", pk_n},
               {"k", pk_k},
               {"terms", newton_support(p).size()},
               {"value", text}};
  }));

  // verify thm1|thm3|thm5|thm6
  auto* cmd_verify = app.add_subcommand(
      "verify", "run a verification suite; the report is always JSON");
  cmd_verify->require_subcommand(1);

  auto* cmd_t1 = cmd_verify->add_subcommand(
      "thm1", "ideal degree of the dense constant-term system vs the "
              "descent count");
  int t1_m = 0, t1_n = 0;
  cmd_t1->add_option("m", t1_m, "window left width")->required();
  cmd_t1->add_option("n", t1_n, "window right width")->required();
  cmd_t1->callback(act([&] {
    const TheoremReport r = verify_theorem1(t1_m, t1_n, env_buchberger_limits());
    out.doc = theorem_report_json(1, r);
    out.human = out.doc.dump();
    out.exit_code = theorem_exit_code(r);
    out.diagnostics.push_back("elapsed_seconds=" + std::to_string(r.seconds));
  }));

  auto* cmd_t3 = cmd_verify->add_subcommand(
      "thm3", "normalized cube-slice volumes vs descent counts over a sweep");
  int t3_max_n = 6;
  cmd_t3->add_option("--max-n", t3_max_n, "largest cube dimension (2..9)")->capture_default_str();
  cmd_t3->callback(act([&] {
    if (t3_max_n < 2 || t3_max_n > 9)
      throw std::invalid_argument("--max-n must lie in 2..9");
    json failures = json::array();
    long cases = 0;
    for (int n = 2; n <= t3_max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        const Rational got = normalized_volume_slice(hypersimplex(k, n), env_hull_options());
        const Integer expected = eulerian(n - 1, k - 1);
        ++cases;
        if (got != Rational(expected))
          failures.push_back({{"k", k},
                              {"n", n},
                              {"got", got.str()},
                              {"expected", expected.get_str()}});
      }
    }
    out.doc = {{"theorem", 3},
               {"max_n", t3_max_n},
               {"cases", cases},
               {"failures", failures},
               {"match", failures.empty()}};
    out.human = out.doc.dump();
    out.exit_code = failures.empty() ? 0 : 1;
  }));

  auto* cmd_t5 = cmd_verify->add_subcommand(
      "thm5", "ideal degree of the sparse constant-term system vs the "
              "refined descent count");
  int t5_m = 0, t5_n = 0, t5_d = 0;
  cmd_t5->add_option("m", t5_m, "window left width")->required();
  cmd_t5->add_option("n", t5_n, "window right width")->required();
  cmd_t5->add_option("d", t5_d, "sparsity stride (must divide m+n)")->required();
  cmd_t5->callback(act([&] {
    const TheoremReport r = verify_theorem5(t5_m, t5_n, t5_d, env_buchberger_limits());
    out.doc = theorem_report_json(5, r);
    out.human = out.doc.dump();
    out.exit_code = theorem_exit_code(r);
    out.diagnostics.push_back("elapsed_seconds=" + std::to_string(r.seconds));
  }));

  auto* cmd_t6 = cmd_verify->add_subcommand(
      "thm6", "fractional slice volumes vs the refined counts, three ways");
  int t6_max_dn = 9, t6_max_d = 3;
  cmd_t6->add_option("--max-dn", t6_max_dn, "largest product d*n (2..9)")->capture_default_str();
  cmd_t6->add_option("--max-d", t6_max_d, "largest denominator")->capture_default_str();
  cmd_t6->callback(act([&] {
    if (t6_max_dn < 2 || t6_max_dn > 9)
      throw std::invalid_argument("--max-dn must lie in 2..9");
    if (t6_max_d < 1) throw std::invalid_argument("--max-d must be positive");
    json failures = json::array();
    long cases = 0;
    const HullOptions options = env_hull_options();
    for (int d = 1; d <= t6_max_d; ++d) {
      for (int n = 1; d * n <= t6_max_dn; ++n) {
        for (int c = 1; c < d * n; ++c) {
          if (std::gcd(c, d) != 1) continue;
          const Rational vol =
              normalized_volume_slice(cube_slice(SliceSpec(c, d, n)), options);
          const Integer refined = refined_eulerian(d * n - 1, c - 1, d);
          const Integer paired = refined_eulerian_via_pairs(n, c, d);
          ++cases;
          if (vol != Rational(refined) || refined != paired)
            failures.push_back({{"c", c},
                                {"d", d},
                                {"n", n},
                                {"volume", vol.str()},
                                {"refined", refined.get_str()},
                                {"via_pairs", paired.get_str()}});
        }
      }
    }
    out.doc = {{"theorem", 6},
               {"max_dn", t6_max_dn},
               {"max_d", t6_max_d},
               {"cases", cases},
               {"failures", failures},
               {"match", failures.empty()}};
    out.human = out.doc.dump();
    out.exit_code = failures.empty() ? 0 : 1;
  }));

  CommandResult result;
  std::vector<std::string> argv_storage;
  argv_storage.push_back("eulervol");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    result.value = app.help();
    while (!result.value.empty() && result.value.back() == '\n') result.value.pop_back();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::error;
    result.exit_code = 2;
    result.diagnostics.push_back(std::string("error (usage): ") + e.what());
    if (json_mode)
      result.value = json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump();
    return result;
  } catch (const CapExceeded& e) {
    result.status = Status::cap_exceeded;
    result.exit_code = 3;
    result.diagnostics.push_back(std::string("error (cap-exceeded): ") + e.what());
    if (json_mode)
      result.value =
          json{{"error", {{"code", "cap-exceeded"}, {"message", e.what()}}}}.dump();
    return result;
  } catch (const std::exception& e) {
    result.status = Status::error;
    result.exit_code = 2;
    result.diagnostics.push_back(std::string("error (usage): ") + e.what());
    if (json_mode)
      result.value = json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump();
    return result;
  }

  if (!ran) {  // help on a subcommand returns without running a callback
    result.value = app.help();
    while (!result.value.empty() && result.value.back() == '\n') result.value.pop_back();
    return result;
  }

  result.value = json_mode ? out.doc.dump() : out.human;
  result.diagnostics = out.diagnostics;
  result.exit_code = out.exit_code;
  result.status = out.exit_code == 3 ? Status::cap_exceeded : Status::ok;
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const CommandResult result = run(args);
  if (!result.value.empty()) std::printf("%s\n", result.value.c_str());
  for (const std::string& line : result.diagnostics)
    std::fprintf(stderr, "%s\n", line.c_str());
  return result.exit_code;
}

}  // namespace eulervol::cli
