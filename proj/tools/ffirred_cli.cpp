// ffirred: irreducibility, order and generation of polynomials over F_q.
//
// Exit codes: 0 affirmative result, 1 negative result (reducible, failed
// self-check, count mismatch), 2 usage, parse or capacity error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffirred/companion.hpp"
#include "ffirred/error.hpp"
#include "ffirred/generate.hpp"
#include "ffirred/irred.hpp"
#include "ffirred/numth.hpp"
#include "ffirred/oracle.hpp"
#include "ffirred/poly.hpp"

namespace {

using ffirred::Error;
using ffirred::ErrorCode;
using ffirred::Field;
using ffirred::Poly;
using nlohmann::ordered_json;

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

// Brute-force cross-checks are skipped beyond this many candidate divisors.
constexpr std::uint64_t kVerifyOracleLimit = std::uint64_t{1} << 20;
// count enumerates explicitly only up to q^d = 2^16.
constexpr std::uint64_t kCountEnumerateLimit = std::uint64_t{1} << 16;
constexpr int kVerifyConjugations = 8;

struct CliConfig {
  std::string field = "2";
  std::string modulus;
  std::string poly;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  bool primitive_only = false;
  std::size_t target_degree = 0;
  std::string output = "text";
  std::string out_path;
  bool fast_order = false;
  bool max_divisors_only = false;
  bool verify = false;
  std::uint64_t seed = 0;
  bool verbose = false;
};

struct Result {
  ordered_json json = ordered_json::object();
  std::vector<std::string> lines;
  int exit_code = kExitAffirmative;
};

Field make_field(const CliConfig& cfg) {
  std::optional<std::vector<ffirred::gf::Residue>> modulus;
  if (!cfg.modulus.empty()) {
    const Field base = Field::prime(Field::parse(cfg.field).p());
    const Poly m = ffirred::parse_poly(cfg.modulus, base);
    modulus.emplace(m.coeffs().begin(), m.coeffs().end());
  }
  return Field::parse(cfg.field, std::move(modulus));
}

ffirred::irred::Options pipeline_options(const CliConfig& cfg) {
  ffirred::irred::Options options;
  if (cfg.fast_order) options.order_method = ffirred::OrderMethod::Factored;
  if (cfg.max_divisors_only) options.divisor_scan = ffirred::irred::DivisorScan::Maximal;
  return options;
}

void describe_field(Result& r, const Field& field) {
  r.json["field"] = field.to_string();
  r.json["p"] = field.p();
  r.json["n"] = field.n();
  r.json["q"] = field.q();
  if (!field.is_prime_field()) {
    std::string m;
    for (std::size_t i = 0; i < field.modulus().size(); ++i) m += (i ? "," : "") + std::to_string(field.modulus()[i]);
    r.json["modulus"] = m;
  }
}

void describe_poly(Result& r, const std::string& key, const Poly& f) {
  r.json[key] = ffirred::format_poly(f);
  r.json[key + "_coeffs"] = ffirred::format_poly_list(f);
}

std::string verdict_line(const ffirred::irred::Verdict& v) {
  using ffirred::irred::Outcome;
  std::string line = ffirred::irred::to_string(v.outcome);
  if (v.outcome == Outcome::Irreducible) {
    if (v.decided_at_step == 0) return line + " ord=undefined step=0";
    line += v.primitive ? " primitive" : " non-primitive";
    return line + " ord=" + std::to_string(v.order_m) + " step=" + std::to_string(v.decided_at_step);
  }
  line += " step=" + std::to_string(v.decided_at_step);
  if (v.decided_at_step == 0) return line + " (divisible by t)";
  line += " m=" + std::to_string(v.order_m);
  if (v.decided_at_step == 4) line += " e=" + std::to_string(*v.witness_e);
  if (v.witness_rank) {
    line += " l=" + std::to_string(v.witness_rank->l) + " rank=" + std::to_string(v.witness_rank->rank) + "<" +
            std::to_string(v.degree);
  }
  return line;
}

void describe_verdict(Result& r, const ffirred::irred::Verdict& v) {
  r.json["degree"] = v.degree;
  r.json["group_order"] = v.group_order;
  r.json["outcome"] = ffirred::irred::to_string(v.outcome);
  r.json["primitive"] = v.primitive;
  r.json["order_m"] = v.order_m;
  r.json["decided_at_step"] = v.decided_at_step;
  r.json["witness_e"] = v.witness_e ? ordered_json(*v.witness_e) : ordered_json(nullptr);
  r.json["witness_l"] = v.witness_rank ? ordered_json(v.witness_rank->l) : ordered_json(nullptr);
  r.json["witness_r"] = v.witness_rank ? ordered_json(v.witness_rank->rank) : ordered_json(nullptr);
}

bool oracle_feasible(const Field& field, std::size_t degree) {
  return ffirred::numth::checked_pow(field.q(), degree / 2, kVerifyOracleLimit).has_value();
}

// Randomized and brute-force self-checks for a single polynomial.
void verify_poly(Result& r, const CliConfig& cfg, const Poly& f, const ffirred::irred::Verdict& v) {
  bool ok = true;
  if (oracle_feasible(f.field(), f.degree())) {
    const bool oracle = ffirred::oracle::brute_force_irreducible(f);
    r.json["verify_oracle"] = oracle == v.irreducible();
    ok = ok && oracle == v.irreducible();
  }
  if (f.raw(0) != 0) {
    std::mt19937_64 rng(cfg.seed);
    const ffirred::Mat a = ffirred::companion_matrix(f);
    bool conj_ok = true;
    for (int i = 0; i < kVerifyConjugations; ++i) {
      const auto conj = ffirred::random_conjugator(f.field(), f.degree(), rng);
      const auto w = ffirred::irred::test_matrix(conj.apply(a), pipeline_options(cfg));
      conj_ok = conj_ok && w.outcome == v.outcome && w.order_m == v.order_m &&
                w.decided_at_step == v.decided_at_step;
    }
    r.json["verify_conjugation"] = conj_ok;
    ok = ok && conj_ok;
  }
  r.json["verify"] = ok ? "PASS" : "FAIL";
  r.lines.push_back(std::string("verify=") + (ok ? "PASS" : "FAIL") + " seed=" + std::to_string(cfg.seed));
  if (!ok) r.exit_code = kExitNegative;
}

Result cmd_test(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  const Poly f = ffirred::parse_poly(cfg.poly, field);
  describe_field(r, field);
  describe_poly(r, "poly", f);
  const auto v = ffirred::irred::test_irreducible(f, pipeline_options(cfg));
  describe_verdict(r, v);
  r.lines.push_back(verdict_line(v));
  if (cfg.verbose) {
    r.lines.push_back("poly: " + ffirred::format_poly(f) + " [" + ffirred::format_poly_list(f) + "]");
    r.lines.push_back("field: F_" + field.to_string() + " q^d-1=" + std::to_string(v.group_order));
  }
  r.exit_code = v.irreducible() ? kExitAffirmative : kExitNegative;
  if (cfg.verify) verify_poly(r, cfg, f, v);
  return r;
}

Result cmd_order(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  const Poly f = ffirred::parse_poly(cfg.poly, field);
  describe_field(r, field);
  describe_poly(r, "poly", f);
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "order needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, ffirred::format_poly(f) + " is not monic");
  if (f.raw(0) == 0) throw Error(ErrorCode::Singular, "ord f is undefined when f(0) = 0");
  const auto cap = ffirred::numth::group_order(field.q(), static_cast<unsigned>(f.degree()));
  const auto method = cfg.fast_order ? ffirred::OrderMethod::Factored : ffirred::OrderMethod::Iterate;
  const std::uint64_t m = ffirred::poly_order(f, cap, method);
  r.json["order_m"] = m;
  r.lines.push_back(std::to_string(m));
  if (cfg.verify) {
    std::mt19937_64 rng(cfg.seed);
    const auto conj = ffirred::random_conjugator(field, f.degree(), rng);
    const bool ok = ffirred::mat_order(conj.apply(ffirred::companion_matrix(f)), cap) == m &&
                    ffirred::poly_order(f, cap, ffirred::OrderMethod::Factored) == m;
    r.json["verify"] = ok ? "PASS" : "FAIL";
    r.lines.push_back(std::string("verify=") + (ok ? "PASS" : "FAIL") + " seed=" + std::to_string(cfg.seed));
    if (!ok) r.exit_code = kExitNegative;
  }
  return r;
}

Result cmd_enumerate(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  describe_field(r, field);
  if (cfg.degree == 0) throw Error(ErrorCode::DegreeZero, "--degree must be at least 1");
  const auto options = pipeline_options(cfg);
  const std::uint64_t group = ffirred::numth::group_order(field.q(), static_cast<unsigned>(cfg.degree));

  ordered_json listed = ordered_json::array();
  std::uint64_t count = 0;
  bool oracle_ok = true;
  for (ffirred::oracle::EnumCursor cursor(field, cfg.degree); !cursor.done(); cursor.advance()) {
    const Poly f = cursor.current();
    const auto v = ffirred::irred::test_irreducible(f, options);
    if (cfg.verify && v.irreducible() != ffirred::oracle::brute_force_irreducible(f)) oracle_ok = false;
    if (!v.irreducible()) continue;
    if (cfg.order != 0 && v.order_m != cfg.order) continue;
    if (cfg.primitive_only && !v.primitive) continue;
    ++count;
    listed.push_back({{"poly", ffirred::format_poly(f)},
                      {"coeffs", ffirred::format_poly_list(f)},
                      {"order_m", v.order_m},
                      {"primitive", v.primitive}});
    std::string line = ffirred::format_poly(f) + "  [" + ffirred::format_poly_list(f) + "]  ord=";
    line += v.order_m == 0 ? "undefined" : std::to_string(v.order_m);
    if (v.primitive) line += " primitive";
    r.lines.push_back(line);
  }

  // Expected count from the counting formulas.
  std::uint64_t expected = 0;
  std::string formula;
  if (cfg.order != 0) {
    expected = cfg.primitive_only && cfg.order != group ? 0
                                                       : ffirred::generate::count_by_order(field, cfg.degree, cfg.order);
    formula = "phi(m)/d";
  } else if (cfg.primitive_only) {
    expected = ffirred::generate::count_by_order(field, cfg.degree, group);
    formula = "phi(q^d-1)/d";
  } else {
    expected = ffirred::oracle::necklace_count(field, cfg.degree);
    formula = "necklace";
  }
  const bool match = count == expected && oracle_ok;
  r.json["degree"] = cfg.degree;
  r.json["order_filter"] = cfg.order == 0 ? ordered_json(nullptr) : ordered_json(cfg.order);
  r.json["primitive_only"] = cfg.primitive_only;
  r.json["polys"] = std::move(listed);
  r.json["count"] = count;
  r.json["expected"] = expected;
  r.json["formula"] = formula;
  r.json["match"] = match;
  if (cfg.verify) r.json["verify_oracle"] = oracle_ok;
  r.lines.push_back("count=" + std::to_string(count) + " expected=" + std::to_string(expected) + " (" + formula +
                    ") " + (match ? "MATCH" : "MISMATCH"));
  r.exit_code = match ? kExitAffirmative : kExitNegative;
  return r;
}

Result cmd_generate(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  const Poly f = ffirred::parse_poly(cfg.poly, field);
  describe_field(r, field);
  describe_poly(r, "source", f);
  if (f.degree() == 0 || !f.is_monic()) throw Error(ErrorCode::NotPrimitive, "source must be monic of degree >= 1");
  const auto report = ffirred::generate::generate_from_primitive(f, cfg.target_degree, pipeline_options(cfg));

  r.json["target_degree"] = cfg.target_degree;
  r.lines.push_back("source: " + ffirred::format_poly(f) + " target-degree=" + std::to_string(cfg.target_degree));
  ordered_json buckets = ordered_json::array();
  for (const auto& bucket : report.buckets) {
    const auto expected = ffirred::generate::count_by_order(field, cfg.target_degree, bucket.order);
    ordered_json polys = ordered_json::array();
    r.lines.push_back("bucket m'=" + std::to_string(bucket.order) + " count=" + std::to_string(bucket.polys.size()) +
                      " expected=" + std::to_string(expected));
    for (const auto& gen : bucket.polys) {
      std::string ls;
      for (std::size_t i = 0; i < gen.ls.size(); ++i) ls += (i ? "," : "") + std::to_string(gen.ls[i]);
      polys.push_back({{"poly", ffirred::format_poly(gen.g)},
                       {"coeffs", ffirred::format_poly_list(gen.g)},
                       {"multiplicity", gen.multiplicity()},
                       {"l", gen.ls}});
      r.lines.push_back("  " + ffirred::format_poly(gen.g) + " x" + std::to_string(gen.multiplicity()) + " l=" + ls);
    }
    buckets.push_back({{"order", bucket.order}, {"expected", expected}, {"polys", std::move(polys)}});
  }
  r.json["buckets"] = std::move(buckets);
  r.json["total"] = report.total();
  r.json["char_poly_consistent"] = report.char_poly_consistent;
  r.json["multiplicity_ok"] = report.multiplicity_ok;
  r.json["orders_ok"] = report.orders_ok;
  r.json["counts_ok"] = report.counts_ok;

  bool ok = report.passed();
  if (cfg.verify) {
    // Every irreducible of degree d' other than t has an admissible order, so
    // the generated set must be exactly the oracle's list minus t.
    std::vector<Poly> expected;
    for (const Poly& g : ffirred::oracle::enumerate_irreducibles(field, cfg.target_degree)) {
      if (g.raw(0) != 0) expected.push_back(g);
    }
    std::vector<Poly> got;
    for (const auto& b : report.buckets) {
      for (const auto& gen : b.polys) got.push_back(gen.g);
    }
    std::sort(got.begin(), got.end(), ffirred::generate::canonical_less);
    const bool same = got == expected;
    r.json["verify_oracle"] = same;
    ok = ok && same;
  }
  r.json["self_check"] = ok ? "PASS" : "FAIL";
  r.lines.push_back(ok ? "PASS" : "FAIL");
  r.exit_code = ok ? kExitAffirmative : kExitNegative;
  return r;
}

Result cmd_find_primitive(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  describe_field(r, field);
  if (cfg.degree == 0) throw Error(ErrorCode::DegreeZero, "--degree must be at least 1");
  const auto options = pipeline_options(cfg);
  r.json["degree"] = cfg.degree;
  for (ffirred::oracle::EnumCursor cursor(field, cfg.degree); !cursor.done(); cursor.advance()) {
    const Poly f = cursor.current();
    const auto v = ffirred::irred::test_irreducible(f, options);
    if (v.irreducible() && v.primitive) {
      describe_poly(r, "poly", f);
      r.json["order_m"] = v.order_m;
      r.json["index"] = cursor.index();
      r.lines.push_back(ffirred::format_poly(f));
      if (cfg.verbose) r.lines.push_back("coeffs: " + ffirred::format_poly_list(f));
      return r;
    }
  }
  r.json["poly"] = nullptr;
  r.lines.push_back("none");
  r.exit_code = kExitNegative;
  return r;
}

Result cmd_count(const CliConfig& cfg) {
  Result r;
  const Field field = make_field(cfg);
  describe_field(r, field);
  if (cfg.degree == 0) throw Error(ErrorCode::DegreeZero, "--degree must be at least 1");
  const std::uint64_t necklace = ffirred::oracle::necklace_count(field, cfg.degree);
  r.json["degree"] = cfg.degree;
  r.json["count"] = necklace;
  std::string line = "count=" + std::to_string(necklace);
  if (ffirred::numth::checked_pow(field.q(), cfg.degree, kCountEnumerateLimit)) {
    const std::uint64_t enumerated = ffirred::oracle::enumerate_irreducibles(field, cfg.degree).size();
    const bool match = enumerated == necklace;
    r.json["enumerated"] = enumerated;
    r.json["match"] = match;
    line += " enumerated=" + std::to_string(enumerated) + (match ? " MATCH" : " MISMATCH");
    if (!match) r.exit_code = kExitNegative;
  } else {
    r.json["enumerated"] = nullptr;
    r.json["match"] = nullptr;
    line += " enumerated=skipped";
  }
  r.lines.push_back(line);
  return r;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--field", cfg.field, "Field: p or p^n")->required();
  sub->add_option("--modulus", cfg.modulus, "Extension modulus over F_p, constant term first");
  sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out_path, "Also write the JSON result to this file");
  sub->add_flag("--fast-order", cfg.fast_order, "Order by reducing a group exponent instead of iterating");
  sub->add_flag("--max-divisors-only", cfg.max_divisors_only, "Rank step checks only m/rho for primes rho | m");
  sub->add_flag("--verify", cfg.verify, "Run brute-force and randomized self-checks");
  sub->add_option("--seed", cfg.seed, "Seed for --verify");
  sub->add_flag("-v,--verbose", cfg.verbose, "Extra detail in text output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility and primitivity of polynomials over finite fields"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* test = app.add_subcommand("test", "Decide irreducibility and primitivity of a monic polynomial");
  add_common(test, cfg);
  test->add_option("--poly", cfg.poly, "Polynomial (list a_0,...,a_d or symbolic)")->required();

  auto* order = app.add_subcommand("order", "Print ord f");
  add_common(order, cfg);
  order->add_option("--poly", cfg.poly, "Polynomial")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List monic irreducibles of a degree");
  add_common(enumerate, cfg);
  enumerate->add_option("--degree", cfg.degree, "Degree")->required();
  enumerate->add_option("--order", cfg.order, "Only polynomials of this order");
  enumerate->add_flag("--primitive", cfg.primitive_only, "Only primitive polynomials");

  auto* generate = app.add_subcommand("generate", "Generate irreducibles of a dividing degree from a primitive polynomial");
  add_common(generate, cfg);
  generate->add_option("--poly", cfg.poly, "Primitive polynomial")->required();
  generate->add_option("--target-degree", cfg.target_degree, "Degree d' dividing deg f")->required();

  auto* find_primitive = app.add_subcommand("find-primitive", "First primitive polynomial in enumeration order");
  add_common(find_primitive, cfg);
  find_primitive->add_option("--degree", cfg.degree, "Degree")->required();

  auto* count = app.add_subcommand("count", "Count monic irreducibles of a degree");
  add_common(count, cfg);
  count->add_option("--degree", cfg.degree, "Degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Result result;
  try {
    if (chosen == test) result = cmd_test(cfg);
    else if (chosen == order) result = cmd_order(cfg);
    else if (chosen == enumerate) result = cmd_enumerate(cfg);
    else if (chosen == generate) result = cmd_generate(cfg);
    else if (chosen == find_primitive) result = cmd_find_primitive(cfg);
    else result = cmd_count(cfg);
  } catch (const Error& e) {
    result = Result{};
    result.json["error"] = std::string(ffirred::to_string(e.code()));
    result.json["message"] = e.what();
    result.lines.push_back(std::string("error: ") + e.what());
    result.exit_code = kExitError;
    if (cfg.output == "text") {
      std::cerr << result.lines.back() << '\n';
      result.lines.clear();
    }
  }

  ordered_json machine = ordered_json::object();
  machine["command"] = command;
  machine.update(result.json);
  machine["exit_code"] = result.exit_code;

  if (cfg.output == "json") {
    std::cout << machine.dump() << '\n';
  } else {
    for (const auto& line : result.lines) std::cout << line << '\n';
  }
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    out << machine.dump() << '\n';
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out_path << '\n';
      return kExitError;
    }
  }
  return result.exit_code;
}
