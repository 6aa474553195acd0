#include "sylsum/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "sylsum/combinatorics.hpp"
#include "sylsum/errors.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/schur.hpp"
#include "sylsum/sylvester.hpp"

namespace sylsum {

namespace {

using Rng = std::mt19937_64;

struct Mismatch {
  std::string what;
  std::string lhs;
  std::string rhs;
};

struct Outcome {
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> tags;

  void expect_equal(const std::string& what, const UPoly& lhs, const UPoly& rhs) {
    ++checks;
    if (lhs != rhs) mismatches.push_back({what, lhs.to_string(), rhs.to_string()});
  }
  void expect_equal(const std::string& what, const Rational& lhs, const Rational& rhs) {
    ++checks;
    if (lhs != rhs) mismatches.push_back({what, lhs.to_string(), rhs.to_string()});
  }
  void expect(const std::string& what, bool ok, const std::string& detail = "") {
    ++checks;
    if (!ok) mismatches.push_back({what, detail, ""});
  }
};

using Generator = Json (*)(const FuzzConfig&, Rng&, std::size_t seq);
using Checker = Outcome (*)(const Json&);

Rng instance_rng(const FuzzConfig& cfg, std::size_t seq) {
  std::seed_seq seq_seed{static_cast<std::uint32_t>(cfg.seed),
                         static_cast<std::uint32_t>(cfg.seed >> 32),
                         static_cast<std::uint32_t>(seq),
                         static_cast<std::uint32_t>(static_cast<std::uint64_t>(seq) >> 32)};
  return Rng(seq_seed);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Rational random_rational(Rng& rng, int bound) {
  return Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

// `count` pairwise distinct rationals, none of them in `avoid`.
std::vector<Rational> distinct_values(Rng& rng, int count, int bound,
                                      const std::vector<Rational>& avoid = {}) {
  std::vector<Rational> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    Rational v = random_rational(rng, bound);
    if (++attempts > 100000) throw std::runtime_error("coeff_bound too small for distinct roots");
    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
    if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
    out.push_back(std::move(v));
  }
  return out;
}

// Uniform composition of `total` into positive parts; with `want_repeat`
// (and total >= 2) at least one part is >= 2.
std::vector<std::size_t> random_composition(Rng& rng, int total, bool want_repeat) {
  while (true) {
    std::vector<std::size_t> parts;
    std::size_t current = 1;
    for (int gap = 1; gap < total; ++gap) {
      if (coin(rng)) {
        parts.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    parts.push_back(current);
    const bool has_repeat =
        std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p >= 2; });
    if (!want_repeat || total < 2 || has_repeat) return parts;
  }
}

RootMultiset make_multiset(const std::vector<Rational>& values,
                           const std::vector<std::size_t>& mults) {
  std::vector<RootEntry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) entries.push_back({values[i], mults[i]});
  return RootMultiset(std::move(entries));
}

struct RootPair {
  RootMultiset a;
  RootMultiset b;
  bool shared = false;
};

// Random A, B with the given degrees. Distinct values inside each multiset;
// with sharing enabled, some values of B are taken from A.
RootPair random_pair(Rng& rng, const FuzzConfig& cfg, int m, int n, bool repeat_a,
                     bool repeat_b) {
  const auto a_mults = random_composition(rng, m, repeat_a);
  const auto b_mults = random_composition(rng, n, repeat_b);
  const auto a_vals = distinct_values(rng, static_cast<int>(a_mults.size()), cfg.coeff_bound);
  std::vector<Rational> b_vals;
  bool shared = false;
  if (cfg.allow_shared_roots && uniform(rng, 0, 2) == 0) {
    const int share =
        uniform(rng, 1, static_cast<int>(std::min(a_vals.size(), b_mults.size())));
    std::vector<Rational> pool = a_vals;
    std::shuffle(pool.begin(), pool.end(), rng);
    b_vals.assign(pool.begin(), pool.begin() + share);
    auto fresh = distinct_values(rng, static_cast<int>(b_mults.size()) - share, cfg.coeff_bound,
                                 a_vals);
    b_vals.insert(b_vals.end(), fresh.begin(), fresh.end());
    shared = true;
  } else {
    b_vals = distinct_values(rng, static_cast<int>(b_mults.size()), cfg.coeff_bound, a_vals);
  }
  return {make_multiset(a_vals, a_mults), make_multiset(b_vals, b_mults), shared};
}

RootPair random_set_pair(Rng& rng, const FuzzConfig& cfg, int m, int n) {
  const std::vector<std::size_t> ones_m(static_cast<std::size_t>(m), 1);
  const std::vector<std::size_t> ones_n(static_cast<std::size_t>(n), 1);
  const auto a_vals = distinct_values(rng, m, cfg.coeff_bound);
  std::vector<Rational> b_vals;
  bool shared = false;
  if (cfg.allow_shared_roots && n > 0 && m > 0 && uniform(rng, 0, 3) == 0) {
    b_vals.push_back(a_vals[static_cast<std::size_t>(uniform(rng, 0, m - 1))]);
    auto fresh = distinct_values(rng, n - 1, cfg.coeff_bound, a_vals);
    b_vals.insert(b_vals.end(), fresh.begin(), fresh.end());
    shared = true;
  } else {
    b_vals = distinct_values(rng, n, cfg.coeff_bound, a_vals);
  }
  return {make_multiset(a_vals, ones_m), make_multiset(b_vals, ones_n), shared};
}

std::string sign_text(long long exponent) { return exponent % 2 == 0 ? "+" : "-"; }

UPoly signed_poly(long long exponent, UPoly p) { return exponent % 2 == 0 ? p : -p; }

RootMultiset ms(const Json& j, const char* key) { return multiset_from_json(j.at(key)); }

std::vector<Rational> avoid_values(std::initializer_list<const RootMultiset*> sets) {
  std::vector<Rational> out;
  for (const auto* s : sets) {
    for (const auto& v : s->values()) out.push_back(v);
  }
  return out;
}

std::string point_text(const std::vector<Rational>& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) out += (i ? "," : "") + pt[i].to_string();
  return out + ")";
}

// Runs a grid identity check and records one check per instance.
void grid_expect(Outcome& out, const std::string& what, const GridEvaluator& lhs,
                 const GridEvaluator& rhs, int vars, int degree,
                 const std::vector<Rational>& avoid) {
  ++out.checks;
  if (auto bad = grid_find_mismatch(lhs, rhs, vars, degree, avoid)) {
    out.mismatches.push_back({what + " at X=" + point_text(*bad), lhs(*bad).to_string(),
                              rhs(*bad).to_string()});
  }
}

// ---------------------------------------------------------------- thm14

Json gen_thm14(const FuzzConfig& cfg, Rng& rng, std::size_t seq) {
  const int m = uniform(rng, 1, cfg.max_deg);
  const int n = uniform(rng, 1, cfg.max_deg);
  // Every other instance is forced to carry a repeated root.
  bool repeat_a = false;
  bool repeat_b = false;
  if (seq % 2 == 0) {
    if (m >= 2 && (n < 2 || coin(rng))) repeat_a = true;
    else if (n >= 2) repeat_b = true;
  }
  const RootPair pair = random_pair(rng, cfg, m, n, repeat_a, repeat_b);
  return Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}};
}

Outcome check_thm14(const Json& inst) {
  Outcome out;
  const RootMultiset a = ms(inst, "A");
  const RootMultiset b = ms(inst, "B");
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const int excess = static_cast<int>(a.excess_count() + b.excess_count());
  const int distinct = static_cast<int>(a.distinct_count() + b.distinct_count());
  if (!a.is_set() || !b.is_set()) out.tags.push_back("profile:repeated-roots");
  else out.tags.push_back("profile:sets");
  for (const auto& e : b.entries()) {
    if (a.contains(e.value)) {
      out.tags.push_back("shared-roots");
      break;
    }
  }
  const UPoly f = poly_from_roots(a);
  const UPoly g = poly_from_roots(b);
  for (int d = 0; d <= std::min(m, n); ++d) {
    if (!in_degree_window(m, n, d)) continue;
    if (d >= excess) out.tags.push_back("regime:large-d");
    else out.tags.push_back(d >= distinct ? "regime:small-d-with-R1" : "regime:small-d");
    const std::string what = "Sres_" + std::to_string(d) + " = " +
                             sign_text(static_cast<long long>(d) * (m - d)) + "SylM";
    try {
      out.expect_equal(what, sres_det(f, g, d),
                       signed_poly(static_cast<long long>(d) * (m - d), sylm(a, b, d)));
    } catch (const Error& e) {
      ++out.checks;
      out.mismatches.push_back({what, e.what(), ""});
    }
  }
  return out;
}

// ---------------------------------------------------------------- thm12

Json gen_thm12(const FuzzConfig& cfg, Rng& rng, std::size_t seq) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int m = uniform(rng, 1, cfg.max_deg);
    const int n = uniform(rng, 1, cfg.max_deg);
    const bool repeat = seq % 2 == 0;
    const RootPair pair =
        random_pair(rng, cfg, m, n, repeat && coin(rng), repeat && coin(rng));
    const int low = static_cast<int>(pair.a.excess_count() + pair.b.excess_count());
    const int high = m == n ? m - 1 : std::min(m, n);
    if (low > high) continue;
    return Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}, {"d", uniform(rng, low, high)}};
  }
  throw std::runtime_error("could not draw a thm12 instance");
}

Outcome check_thm12(const Json& inst) {
  Outcome out;
  const RootMultiset a = ms(inst, "A");
  const RootMultiset b = ms(inst, "B");
  const int d = inst.at("d").get<int>();
  const int m = static_cast<int>(a.size());
  const std::vector<SylmTerm> terms = sylm_terms(a, b, d);
  const bool all_empty = std::all_of(terms.begin(), terms.end(), [](const SylmTerm& t) {
    return t.partition.r == 0 && t.partition.block_size(0) == 0 &&
           t.partition.block_size(1) == 0 && t.partition.block_size(2) == 0;
  });
  out.expect("only the empty partition contributes", all_empty);
  UPoly via_terms;
  for (const auto& t : terms) via_terms += t.value;
  const UPoly direct = sylm_large_d(a, b, d);
  out.expect_equal("SylM (partition sum) = SylM (two-index sum)", via_terms, direct);
  out.expect_equal("Sres_d = sign * SylM (two-index sum)", sres_det(poly_from_roots(a), poly_from_roots(b), d),
                   signed_poly(static_cast<long long>(d) * (m - d), direct));
  if (!a.is_set() || !b.is_set()) out.tags.push_back("profile:repeated-roots");
  return out;
}

// ---------------------------------------------------------------- eq1 / eq2 / eq3

Json gen_sets(const FuzzConfig& cfg, Rng& rng, std::size_t) {
  const int m = uniform(rng, 1, cfg.max_deg);
  const int n = uniform(rng, 1, cfg.max_deg);
  const RootPair pair = random_set_pair(rng, cfg, m, n);
  return Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}};
}

enum class ClassicalIdentity { Eq1, Eq2, Eq3 };

Outcome check_classical(const Json& inst, ClassicalIdentity which) {
  Outcome out;
  const RootMultiset a = ms(inst, "A");
  const RootMultiset b = ms(inst, "B");
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const UPoly f = poly_from_roots(a);
  const UPoly g = poly_from_roots(b);
  for (int d = 0; d <= std::min(m, n); ++d) {
    if (!in_degree_window(m, n, d)) continue;
    const UPoly sres = sres_det(f, g, d);
    const UPoly single = syl_single(a, b, d);
    if (which == ClassicalIdentity::Eq3) {
      out.expect_equal("Sres_" + std::to_string(d) + " = sign * Syl_{d,0}", sres,
                       signed_poly(static_cast<long long>(d) * (m - d), single));
      continue;
    }
    for (int p = 0; p <= d; ++p) {
      const int q = d - p;
      if (p > m || q > n) continue;
      const UPoly dbl = syl_double(a, b, p, q);
      const Rational c(static_cast<std::int64_t>(binom(d, p)));
      const std::string label = "Syl_{" + std::to_string(p) + "," + std::to_string(q) + "}";
      if (which == ClassicalIdentity::Eq1) {
        out.expect_equal(label + " = sign * C(d,p) * Sres_d", dbl,
                         signed_poly(static_cast<long long>(p) * (m - d), c * sres));
      } else {
        out.expect_equal(label + " = sign * C(d,p) * Syl_{d,0}", dbl,
                         signed_poly(static_cast<long long>(q) * (m - d), c * single));
      }
    }
  }
  return out;
}

Outcome check_eq1(const Json& inst) { return check_classical(inst, ClassicalIdentity::Eq1); }
Outcome check_eq2(const Json& inst) { return check_classical(inst, ClassicalIdentity::Eq2); }
Outcome check_eq3(const Json& inst) { return check_classical(inst, ClassicalIdentity::Eq3); }

// ---------------------------------------------------------------- lemma24

Json gen_lemma24(const FuzzConfig& cfg, Rng& rng, std::size_t) {
  Json part1;
  {
    const int size_a = uniform(rng, 1, cfg.max_deg);
    const int size_b = uniform(rng, 1, cfg.max_deg);
    const int d = uniform(rng, 0, std::min(size_a, size_b));
    const int vars = uniform(rng, 0, std::min(2, size_a + size_b - 2 * d));
    const RootPair pair = random_set_pair(rng, cfg, size_a, size_b);
    part1 = Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}, {"d", d}, {"vars", vars}};
  }
  Json part2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int size_a = uniform(rng, 1, cfg.max_deg);
    const int size_b = uniform(rng, 0, cfg.max_deg);
    if (size_b + 1 > size_a) continue;
    const int d = uniform(rng, size_b + 1, size_a);
    if (size_a + size_b < 2 * d) continue;
    const int vars = uniform(rng, 0, std::min(2, size_a + size_b - 2 * d));
    const RootPair pair = random_set_pair(rng, cfg, size_a, size_b);
    part2 = Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}, {"d", d}, {"vars", vars}};
    break;
  }
  return Json{{"part1", part1}, {"part2", part2}};
}

Outcome check_lemma24(const Json& inst) {
  Outcome out;
  {
    const Json& p = inst.at("part1");
    const RootMultiset a = ms(p, "A");
    const RootMultiset b = ms(p, "B");
    const int d = p.at("d").get<int>();
    const int vars = p.at("vars").get<int>();
    grid_expect(
        out, "exchange: single sum over A = sign * single sum over B",
        [&](std::span<const Rational> xs) { return single_sum_eval(a, b, d, xs); },
        [&](std::span<const Rational> xs) { return exchange_rhs_eval(a, b, d, xs); }, vars, d,
        avoid_values({&a, &b}));
    out.tags.push_back("part1");
  }
  if (!inst.at("part2").is_null()) {
    const Json& p = inst.at("part2");
    const RootMultiset a = ms(p, "A");
    const RootMultiset b = ms(p, "B");
    const int d = p.at("d").get<int>();
    const int vars = p.at("vars").get<int>();
    grid_expect(
        out, "single sum vanishes when |B| < d",
        [&](std::span<const Rational> xs) { return single_sum_eval(a, b, d, xs); },
        [](std::span<const Rational>) { return Rational(0); }, vars, d, avoid_values({&a, &b}));
    out.tags.push_back("part2");
  }
  return out;
}

// ---------------------------------------------------------------- prop21

Json gen_prop21(const FuzzConfig& cfg, Rng& rng, std::size_t seq) {
  const int max_total = std::min(8, 2 * cfg.max_deg);
  int m = 0;
  int n = 0;
  do {
    m = uniform(rng, 1, cfg.max_deg);
    n = uniform(rng, 1, cfg.max_deg);
  } while (m + n > max_total);
  const int d = uniform(rng, 0, m);
  const int vars = uniform(rng, 0, 2);
  const int bound = std::max({vars + d, m + n - d, m});
  const int e_size = bound + static_cast<int>(seq % 3);
  const RootPair pair = random_set_pair(rng, cfg, m, n);
  const std::vector<Rational> avoid =
      cfg.allow_e_overlap ? std::vector<Rational>{} : avoid_values({&pair.a, &pair.b});
  const RootMultiset e = RootMultiset::from_values(distinct_values(rng, e_size, cfg.coeff_bound, avoid));
  return Json{{"A", to_json(pair.a)}, {"B", to_json(pair.b)}, {"d", d},
              {"E", to_json(e)},      {"vars", vars},         {"e_excess", e_size - bound}};
}

Outcome check_prop21(const Json& inst) {
  Outcome out;
  const RootMultiset a = ms(inst, "A");
  const RootMultiset b = ms(inst, "B");
  const RootMultiset e = ms(inst, "E");
  const int d = inst.at("d").get<int>();
  const int vars = inst.at("vars").get<int>();
  grid_expect(
      out, "single sum = sum over E1+E2+E3",
      [&](std::span<const Rational> xs) { return single_sum_eval(a, b, d, xs); },
      [&](std::span<const Rational> xs) { return apery_jouanolou_rhs(a, b, d, e, xs); }, vars, d,
      avoid_values({&a, &b, &e}));
  if (inst.contains("e_excess")) {
    out.tags.push_back("E:bound+" + std::to_string(inst.at("e_excess").get<int>()));
  }
  return out;
}

// ---------------------------------------------------------------- prop23

SymmetricEvaluator symmetric_test_poly(const std::string& kind, const Rational& constant) {
  if (kind == "const") return [constant](std::span<const Rational>) { return constant; };
  if (kind == "e1") {
    return [](std::span<const Rational> x) {
      Rational s;
      for (const auto& v : x) s += v;
      return s;
    };
  }
  if (kind == "e2") {
    return [](std::span<const Rational> x) {
      Rational s;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += x[i] * x[j];
      return s;
    };
  }
  if (kind.size() > 1 && kind[0] == 'p') {
    const unsigned k = static_cast<unsigned>(std::stoul(kind.substr(1)));
    return [k](std::span<const Rational> x) {
      Rational s;
      for (const auto& v : x) s += v.pow(k);
      return s;
    };
  }
  throw Error(Errc::ValidationError, "unknown symmetric test polynomial \"" + kind + "\"");
}

// The test polynomial family cycles with seq so every family is exercised.
Json gen_prop23(const FuzzConfig& cfg, Rng& rng, std::size_t seq) {
  const int e_size = uniform(rng, 2, std::max(2, std::min(cfg.max_deg, 6)));
  const int family = static_cast<int>(seq % 4);
  const int d = family == 0 ? uniform(rng, 0, e_size - 1) : uniform(rng, 1, e_size - 1);
  std::string kind;
  switch (family) {
    case 0: kind = "const"; break;
    case 1: kind = "e1"; break;
    case 2: kind = "e2"; break;
    default: kind = "p" + std::to_string(uniform(rng, 1, d)); break;
  }
  const RootMultiset e = RootMultiset::from_values(distinct_values(rng, e_size, cfg.coeff_bound));
  return Json{{"E", to_json(e)}, {"d", d}, {"h", kind},
              {"constant", random_rational(rng, cfg.coeff_bound).to_string()}};
}

Outcome check_prop23(const Json& inst) {
  Outcome out;
  const RootMultiset e = ms(inst, "E");
  const int d = inst.at("d").get<int>();
  const std::string kind = inst.at("h").get<std::string>();
  const SymmetricEvaluator h = symmetric_test_poly(kind, rational_from_json(inst.at("constant")));
  const int vars = static_cast<int>(e.size()) - d;
  grid_expect(
      out, "h(X) = interpolation of " + kind + " through E",
      [&](std::span<const Rational> xs) { return h(xs); },
      [&](std::span<const Rational> xs) { return sym_interp_eval(e, d, h, xs); }, vars, d,
      avoid_values({&e}));
  out.tags.push_back(kind[0] == 'p' ? "h:power-sum" : "h:" + kind);
  return out;
}

// ---------------------------------------------------------------- lemma34

Json gen_lemma34(const FuzzConfig&, Rng&, std::size_t seq) {
  return Json{{"r", static_cast<int>(seq) + 1}};
}

Outcome check_lemma34(const Json& inst) {
  Outcome out;
  const int r = inst.at("r").get<int>();
  for (const IndexPartition& p : all_ordered_partitions(r, 3)) {
    for (int s = 0; s <= r; ++s) {
      const bool valid = std::all_of(p.blocks[0].begin(), p.blocks[0].end(),
                                     [s](int i) { return i - s >= 1; });
      std::ostringstream what;
      what << "r=" << r << " s=" << s << " R1={";
      for (int i : p.blocks[0]) what << i << ' ';
      what << "} R2={";
      for (int i : p.blocks[1]) what << i << ' ';
      what << "}";
      if (valid) {
        out.expect(what.str() + " sign identity", check_sign_lemma(r, s, p));
      } else {
        bool raised = false;
        try {
          check_sign_lemma(r, s, p);
        } catch (const Error& e) {
          raised = e.code() == Errc::ShiftOutOfRange;
        }
        out.expect(what.str() + " rejected as ShiftOutOfRange", raised);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- schur-consistency

Json gen_schur(const FuzzConfig& cfg, Rng& rng, std::size_t) {
  const int r = uniform(rng, 1, 5);
  const int k = uniform(rng, r, r + 4);
  IndexSet removed;
  {
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows[i] = i + 1;
    std::shuffle(rows.begin(), rows.end(), rng);
    removed.assign(rows.begin(), rows.begin() + (k - r));
    std::sort(removed.begin(), removed.end());
  }
  const RootMultiset x = RootMultiset::from_values(distinct_values(rng, r, cfg.coeff_bound));
  // A multiset with the same total size for the symbolic-point check.
  const auto mults = random_composition(rng, r, true);
  const RootMultiset confluent =
      make_multiset(distinct_values(rng, static_cast<int>(mults.size()), cfg.coeff_bound), mults);
  const int kx = uniform(rng, r + 1, r + 4);
  IndexSet removed_x;
  {
    std::vector<int> rows(static_cast<std::size_t>(kx));
    for (int i = 0; i < kx; ++i) rows[i] = i + 1;
    std::shuffle(rows.begin(), rows.end(), rng);
    removed_x.assign(rows.begin(), rows.begin() + (kx - r - 1));
    std::sort(removed_x.begin(), removed_x.end());
  }
  return Json{{"k", k},       {"R", removed},   {"X", to_json(x)},
              {"kx", kx},     {"Rx", removed_x}, {"Y", to_json(confluent)}};
}

Outcome check_schur(const Json& inst) {
  Outcome out;
  const auto k = inst.at("k").get<std::size_t>();
  const auto removed = inst.at("R").get<IndexSet>();
  const RootMultiset x = ms(inst, "X");
  out.expect("confluent ratio = classical bialternant", schur_consistency_check(k, removed, x));
  if (inst.contains("Y")) {
    const auto kx = inst.at("kx").get<std::size_t>();
    const auto removed_x = inst.at("Rx").get<IndexSet>();
    const RootMultiset y = ms(inst, "Y");
    try {
      const UPoly s = schur_poly_x({kx, removed_x, y, true});
      out.expect("symbolic-point Schur has degree <= k-1",
                 s.is_zero() || *s.degree() + 1 <= kx, s.to_string());
    } catch (const Error& e) {
      out.expect("symbolic-point Schur divides exactly", false, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------- examples

const std::vector<std::array<Rational, 3>>& example_triples() {
  static const std::vector<std::array<Rational, 3>> triples = {
      {Rational(0), Rational(1), Rational(2)},
      {Rational(1, 2), Rational(-3), Rational(5)},
      {Rational(-2), Rational(7, 3), Rational(4, 5)},
  };
  return triples;
}

Json gen_examples(const FuzzConfig&, Rng&, std::size_t seq) {
  const auto& t = example_triples()[seq];
  return Json{{"alpha1", t[0].to_string()}, {"alpha2", t[1].to_string()},
              {"beta1", t[2].to_string()}};
}

Outcome check_examples(const Json& inst) {
  Outcome out;
  const Rational a1 = rational_from_json(inst.at("alpha1"));
  const Rational a2 = rational_from_json(inst.at("alpha2"));
  const Rational b1 = rational_from_json(inst.at("beta1"));
  const RootMultiset a({{a1, 1}, {a2, 2}});
  const UPoly f = poly_from_roots(a);

  // f = (x-a1)(x-a2)^2, g = (x-b1)^2, d = 2: the large-d regime.
  {
    const RootMultiset b({{b1, 2}});
    const UPoly g = poly_from_roots(b);
    out.expect_equal("Example (g=(x-b1)^2): SylM_{2,0} = g", sylm(a, b, 2), g);
    out.expect_equal("Example (g=(x-b1)^2): Sres_2 = g", sres_det(f, g, 2), g);
  }
  // g = (x-b1)^3, d = 2 < m'+n' = 3: needs the Schur-weighted sum.
  {
    const RootMultiset b({{b1, 3}});
    const UPoly g = poly_from_roots(b);
    out.expect_equal("Example (g=(x-b1)^3): SylM_{2,0} = g - f", sylm(a, b, 2), g - f);
    out.expect_equal("Example (g=(x-b1)^3): Sres_2 = g - f", sres_det(f, g, 2), g - f);
    const UPoly forced = sylm_large_d(a, b, 2, /*force=*/true);
    const auto [quot, rem] = poly_divmod(forced, UPoly::linear_factor(b1));
    out.expect("Example (g=(x-b1)^3): two-index sum is a multiple of (x - b1)", rem.is_zero(),
               forced.to_string());
    out.expect("Example (g=(x-b1)^3): two-index sum differs from Sres_2", forced != g - f,
               forced.to_string());
  }
  return out;
}

struct SuiteDef {
  const char* name;
  Generator generate;
  Checker check;
  // Fixed instance count for exhaustive suites; 0 means cfg.count.
  std::size_t fixed_count;
};

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {"thm14", gen_thm14, check_thm14, 0},
      {"thm12", gen_thm12, check_thm12, 0},
      {"eq1", gen_sets, check_eq1, 0},
      {"eq2", gen_sets, check_eq2, 0},
      {"eq3", gen_sets, check_eq3, 0},
      {"lemma24", gen_lemma24, check_lemma24, 0},
      {"prop21", gen_prop21, check_prop21, 0},
      {"prop23", gen_prop23, check_prop23, 0},
      {"lemma34", gen_lemma34, check_lemma34, 6},
      {"schur-consistency", gen_schur, check_schur, 0},
      {"examples", gen_examples, check_examples, 3},
  };
  return table;
}

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& def : suite_table()) {
    if (name == def.name) return def;
  }
  throw Error(Errc::UnknownSuite, "no suite named \"" + std::string(name) + "\"");
}

void absorb(SuiteReport& report, const SuiteDef& def, std::size_t seq, const Json& inst,
            const Outcome& outcome) {
  report.checks += outcome.checks;
  for (const auto& tag : outcome.tags) ++report.coverage[tag];
  for (const auto& mm : outcome.mismatches) {
    report.failures.push_back({seq, def.name, inst, mm.what, mm.lhs, mm.rhs});
  }
}

Outcome guarded_check(const SuiteDef& def, const Json& inst) {
  try {
    return def.check(inst);
  } catch (const std::exception& e) {
    Outcome out;
    out.checks = 1;
    out.mismatches.push_back({"instance raised an exception", e.what(), ""});
    return out;
  }
}

}  // namespace

Json SuiteReport::to_json(bool include_timing) const {
  Json j = Json::object();
  j["suite"] = suite;
  j["instances"] = instances;
  j["checks"] = checks;
  j["passed"] = passed();
  Json cov = Json::object();
  for (const auto& [tag, n] : coverage) cov[tag] = n;
  j["coverage"] = cov;
  Json fails = Json::array();
  for (const auto& f : failures) {
    fails.push_back(Json{{"seq", f.seq}, {"suite", f.suite}, {"instance", f.instance},
                         {"what", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = fails;
  if (include_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << instances << " instances, " << checks << " checks, "
     << failures.size() << " failures -> " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [tag, n] : coverage) os << "  coverage " << tag << ": " << n << "\n";
  for (const auto& f : failures) {
    os << "  FAIL #" << f.seq << " " << f.what << "\n";
    if (!f.lhs.empty()) os << "    lhs: " << f.lhs << "\n";
    if (!f.rhs.empty()) os << "    rhs: " << f.rhs << "\n";
    os << "    replay: " << Json{{"suite", f.suite}, {"instance", f.instance}}.dump() << "\n";
  }
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : suite_table()) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& fuzz_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : suite_table()) {
      if (def.fixed_count == 0) out.emplace_back(def.name);
    }
    return out;
  }();
  return names;
}

Json generate_instance(std::string_view name, const FuzzConfig& cfg, std::size_t seq) {
  const SuiteDef& def = find_suite(name);
  Rng rng = instance_rng(cfg, seq);
  return def.generate(cfg, rng, seq);
}

SuiteReport run_suite(std::string_view name, const FuzzConfig& cfg) {
  const SuiteDef& def = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = def.name;
  const std::size_t count =
      def.fixed_count != 0 ? def.fixed_count : static_cast<std::size_t>(std::max(cfg.count, 0));
  for (std::size_t seq = 0; seq < count; ++seq) {
    Rng rng = instance_rng(cfg, seq);
    const Json inst = def.generate(cfg, rng, seq);
    absorb(report, def, seq, inst, guarded_check(def, inst));
    ++report.instances;
  }
  // Both sylm regimes must be exercised once the sample is large enough.
  if (report.suite == "thm14" && report.instances >= 20) {
    const bool large = report.coverage.count("regime:large-d") > 0;
    const bool small = report.coverage.count("regime:small-d") + report.coverage.count("regime:small-d-with-R1") > 0;
    if (!large || !small) {
      report.failures.push_back({0, def.name, Json::object(), "regime coverage",
                                 large ? "large-d covered" : "large-d missing",
                                 small ? "small-d covered" : "small-d missing"});
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport replay(const Json& record) {
  if (!record.is_object() || !record.contains("suite") || !record.contains("instance")) {
    throw Error(Errc::ValidationError, "replay record needs \"suite\" and \"instance\"");
  }
  const SuiteDef& def = find_suite(record.at("suite").get<std::string>());
  const std::size_t seq = record.contains("seq") ? record.at("seq").get<std::size_t>() : 0;
  SuiteReport report;
  report.suite = def.name;
  const auto start = std::chrono::steady_clock::now();
  absorb(report, def, seq, record.at("instance"), guarded_check(def, record.at("instance")));
  report.instances = 1;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Rational> grid_points(int count, std::span<const Rational> avoid) {
  std::vector<Rational> out;
  for (std::int64_t v = 0; static_cast<int>(out.size()) < count; ++v) {
    const Rational candidate(v);
    if (std::find(avoid.begin(), avoid.end(), candidate) == avoid.end()) out.push_back(candidate);
  }
  return out;
}

std::optional<std::vector<Rational>> grid_find_mismatch(const GridEvaluator& lhs,
                                                        const GridEvaluator& rhs, int vars,
                                                        int per_var_degree,
                                                        std::span<const Rational> avoid) {
  const std::vector<Rational> axis = grid_points(per_var_degree + 1, avoid);
  std::vector<std::size_t> index(static_cast<std::size_t>(vars), 0);
  std::vector<Rational> point(static_cast<std::size_t>(vars));
  while (true) {
    for (int i = 0; i < vars; ++i) point[i] = axis[index[i]];
    if (lhs(point) != rhs(point)) return point;
    int pos = vars - 1;
    while (pos >= 0 && index[pos] + 1 == axis.size()) index[pos--] = 0;
    if (pos < 0) break;
    ++index[pos];
  }
  return std::nullopt;
}

bool grid_check_identity(const GridEvaluator& lhs, const GridEvaluator& rhs, int vars,
                         int per_var_degree, std::span<const Rational> avoid) {
  return !grid_find_mismatch(lhs, rhs, vars, per_var_degree, avoid).has_value();
}

}  // namespace sylsum
