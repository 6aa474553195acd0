// sylsum: exact subresultants from coefficients and from roots, plus the
// identity verification suites.
//
// Exit status: 0 success, 1 a checked property failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sylsum/errors.hpp"
#include "sylsum/io.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/schur.hpp"
#include "sylsum/suites.hpp"
#include "sylsum/sylvester.hpp"

namespace {

using namespace sylsum;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  bool trace = false;
  std::uint64_t seed = 42;
  int count = 100;
  int max_deg = 6;
  int coeff_bound = 10;
  bool no_shared = false;
  bool allow_e_overlap = false;
  std::string replay_file;
};

struct RootArgs {
  std::string a;
  std::string b;
  std::string f;
  std::string g;
  int d = 0;
  int p = 0;
  int q = 0;
  bool force_bigd = false;
};

struct SchurArgs {
  std::size_t k = 0;
  std::string removed;
  std::string points;
  bool with_x = false;
};

void print_poly(const Globals& g, const std::string& label, const UPoly& p) {
  if (g.json) {
    std::cout << to_json(p).dump() << "\n";
  } else {
    std::cout << label << " = " << p.to_string() << "\n";
  }
}

IndexSet parse_index_list(const std::string& text) {
  IndexSet out;
  for (const Rational& v : parse_rational_list(text)) {
    if (!v.is_integer()) throw Error(Errc::ParseError, "row index " + v.to_string() + " is not an integer");
    out.push_back(std::stoi(v.to_string()));
  }
  return out;
}

int cmd_sres(const Globals& g, const RootArgs& args) {
  SresQuery q;
  if (!args.f.empty()) q.f = parse_poly(args.f);
  if (!args.g.empty()) q.g = parse_poly(args.g);
  if (!args.a.empty() && !q.f) q.a = parse_multiset(args.a);
  if (!args.b.empty() && !q.g) q.b = parse_multiset(args.b);
  q.d = args.d;
  // Round-trip through the JSON reader so the same validation applies.
  q = query_from_json(to_json(q));
  print_poly(g, "Sres_" + std::to_string(q.d), sres_det(q.f_poly(), q.g_poly(), q.d));
  return kExitOk;
}

int cmd_syl_single(const Globals& g, const RootArgs& args) {
  const UPoly p = syl_single(parse_multiset(args.a), parse_multiset(args.b), args.d);
  print_poly(g, "Syl_{" + std::to_string(args.d) + ",0}", p);
  return kExitOk;
}

int cmd_syl_double(const Globals& g, const RootArgs& args) {
  const UPoly p = syl_double(parse_multiset(args.a), parse_multiset(args.b), args.p, args.q);
  print_poly(g, "Syl_{" + std::to_string(args.p) + "," + std::to_string(args.q) + "}", p);
  return kExitOk;
}

Json term_json(const SylmTerm& t) {
  Json values_a = Json::array();
  for (const auto& v : t.a_prime.selected().values()) values_a.push_back(v.to_string());
  Json values_b = Json::array();
  for (const auto& v : t.b_prime.selected().values()) values_b.push_back(v.to_string());
  return Json{{"R1", t.partition.blocks[0]}, {"R2", t.partition.blocks[1]},
              {"R3", t.partition.blocks[2]}, {"A_prime", values_a},
              {"B_prime", values_b},         {"sign", t.sign},
              {"value", to_json(t.value)}};
}

int cmd_sylm(const Globals& g, const RootArgs& args) {
  const RootMultiset a = parse_multiset(args.a);
  const RootMultiset b = parse_multiset(args.b);
  const std::string label = "SylM_{" + std::to_string(args.d) + ",0}";
  if (args.force_bigd) {
    std::cerr << "warning: --force-bigd evaluates the two-index sum outside its range; "
                 "the result carries no meaning\n";
    print_poly(g, label + " (forced two-index sum)", sylm_large_d(a, b, args.d, true));
    return kExitOk;
  }
  const std::vector<SylmTerm> terms = sylm_terms(a, b, args.d);
  UPoly total;
  for (const auto& t : terms) total += t.value;
  if (g.trace) {
    Json trace = Json::array();
    for (const auto& t : terms) trace.push_back(term_json(t));
    if (g.json) {
      std::cout << Json{{"terms", trace}, {"result", to_json(total)}}.dump() << "\n";
      return kExitOk;
    }
    for (const auto& t : terms) std::cout << term_json(t).dump() << "\n";
  }
  print_poly(g, label, total);
  return kExitOk;
}

int cmd_schur(const Globals& g, const SchurArgs& args) {
  SchurSpec spec{args.k, parse_index_list(args.removed), parse_multiset(args.points), args.with_x};
  if (args.with_x) {
    print_poly(g, "S", schur_poly_x(spec));
    return kExitOk;
  }
  const Rational v = schur_value(spec);
  if (g.json) std::cout << to_json(v).dump() << "\n";
  else std::cout << "S = " << v << "\n";
  return kExitOk;
}

FuzzConfig fuzz_config(const Globals& g) {
  FuzzConfig cfg;
  cfg.seed = g.seed;
  cfg.count = g.count;
  cfg.max_deg = g.max_deg;
  cfg.coeff_bound = g.coeff_bound;
  cfg.allow_shared_roots = !g.no_shared;
  cfg.allow_e_overlap = g.allow_e_overlap;
  return cfg;
}

int emit_reports(const Globals& g, const std::vector<SuiteReport>& reports) {
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (g.json) all.push_back(r.to_json());
    else std::cout << r.to_text();
    std::cerr << r.suite << ": " << r.wall_seconds << " s\n";
  }
  if (g.json) std::cout << (reports.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  const FuzzConfig cfg = fuzz_config(g);
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    for (const auto& name : suite_names()) reports.push_back(run_suite(name, cfg));
  } else {
    reports.push_back(run_suite(suite, cfg));
  }
  return emit_reports(g, reports);
}

int cmd_fuzz(const Globals& g) {
  const FuzzConfig cfg = fuzz_config(g);
  std::vector<SuiteReport> reports;
  for (const auto& name : fuzz_suite_names()) reports.push_back(run_suite(name, cfg));
  return emit_reports(g, reports);
}

// Accepts one failure record, an array of them, or a whole report.
int cmd_replay(const Globals& g) {
  std::ifstream in(g.replay_file);
  if (!in) throw Error(Errc::ValidationError, "cannot open replay file \"" + g.replay_file + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  const Json doc = parse_json(buf.str());
  std::vector<Json> records;
  auto collect = [&records](const Json& j) {
    if (j.is_object() && j.contains("failures")) {
      for (const auto& f : j.at("failures")) records.push_back(f);
    } else {
      records.push_back(j);
    }
  };
  if (doc.is_array()) {
    for (const auto& j : doc) collect(j);
  } else {
    collect(doc);
  }
  std::vector<SuiteReport> reports;
  for (const auto& r : records) reports.push_back(replay(r));
  return emit_reports(g, reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subresultants via determinants and Sylvester sums"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Structured JSON output");
  app.add_flag("--trace", g.trace, "Dump every SylM term");
  app.add_option("--seed", g.seed, "Fuzz seed");
  app.add_option("--count", g.count, "Instances per suite")->check(CLI::PositiveNumber);
  app.add_option("--max-deg", g.max_deg, "Largest degree drawn")->check(CLI::PositiveNumber);
  app.add_option("--coeff-bound", g.coeff_bound, "Roots are p/q with |p|, q <= bound")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-shared", g.no_shared, "Keep A and B disjoint in generated instances");
  app.add_flag("--allow-e-overlap", g.allow_e_overlap, "Let E meet A and B in prop21");
  app.add_option("--replay", g.replay_file, "Re-check failure records from a JSON file");

  RootArgs roots;
  auto* sres = app.add_subcommand("sres", "Subresultant as a determinant");
  sres->add_option("--f", roots.f, "f as coefficients (ascending) or JSON");
  sres->add_option("--g", roots.g, "g as coefficients (ascending) or JSON");
  sres->add_option("--A", roots.a, "Roots of f (shorthand or JSON)");
  sres->add_option("--B", roots.b, "Roots of g (shorthand or JSON)");
  sres->add_option("--d", roots.d, "Subresultant index")->required();

  auto* single = app.add_subcommand("syl-single", "Sylvester single sum over sets");
  single->add_option("--A", roots.a)->required();
  single->add_option("--B", roots.b)->required();
  single->add_option("--d", roots.d)->required();

  auto* dbl = app.add_subcommand("syl-double", "Sylvester double sum over sets");
  dbl->add_option("--A", roots.a)->required();
  dbl->add_option("--B", roots.b)->required();
  dbl->add_option("--p", roots.p)->required();
  dbl->add_option("--q", roots.q)->required();

  auto* sylm_cmd = app.add_subcommand("sylm", "Multiset Sylvester sum");
  sylm_cmd->add_option("--A", roots.a)->required();
  sylm_cmd->add_option("--B", roots.b)->required();
  sylm_cmd->add_option("--d", roots.d)->required();
  sylm_cmd->add_flag("--force-bigd", roots.force_bigd,
                     "Debug: evaluate the two-index sum even when d is too small");

  SchurArgs schur;
  auto* schur_cmd = app.add_subcommand("schur", "Confluent Schur ratio");
  schur_cmd->add_option("--k", schur.k)->required();
  schur_cmd->add_option("--R", schur.removed, "Removed rows, comma separated");
  schur_cmd->add_option("--points", schur.points, "Points (multiset shorthand or JSON)")->required();
  schur_cmd->add_flag("--with-x", schur.with_x, "Append the symbolic point x");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run one verification suite (or \"all\")");
  verify->add_option("suite", suite)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Run every randomized suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!g.replay_file.empty()) return cmd_replay(g);
    if (*sres) return cmd_sres(g, roots);
    if (*single) return cmd_syl_single(g, roots);
    if (*dbl) return cmd_syl_double(g, roots);
    if (*sylm_cmd) return cmd_sylm(g, roots);
    if (*schur_cmd) return cmd_schur(g, schur);
    if (*verify) return cmd_verify(g, suite);
    if (*fuzz) return cmd_fuzz(g);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
