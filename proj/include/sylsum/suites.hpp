#ifndef SYLSUM_SUITES_HPP
#define SYLSUM_SUITES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylsum/io.hpp"
#include "sylsum/rational.hpp"

namespace sylsum {

/// Parameters of the seeded instance generators. The same config always
/// yields the same instance stream: instance i is drawn from a
/// std::mt19937_64 seeded with (seed, i) through std::seed_seq.
struct FuzzConfig {
  std::uint64_t seed = 42;
  int count = 100;
  int max_deg = 6;
  /// Roots are p/q with |p| <= coeff_bound and 1 <= q <= coeff_bound.
  int coeff_bound = 10;
  bool allow_shared_roots = true;
  /// Lets the auxiliary set E of prop21 overlap A and B.
  bool allow_e_overlap = false;
};

struct Failure {
  std::size_t seq = 0;
  std::string suite;
  Json instance;
  std::string what;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<Failure> failures;
  /// Tag -> number of checks carrying it (e.g. which sylm regime was hit).
  std::map<std::string, std::size_t> coverage;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  /// Timing is left out unless asked for, so reports are reproducible.
  Json to_json(bool include_timing = false) const;
  std::string to_text() const;
};

/// thm14, thm12, eq1, eq2, eq3, lemma24, prop21, prop23, lemma34,
/// schur-consistency, examples.
const std::vector<std::string>& suite_names();
/// The suites that draw random instances (everything but lemma34 and examples).
const std::vector<std::string>& fuzz_suite_names();

/// Runs one suite. lemma34 and examples ignore the seed and count: they
/// enumerate fixed instances. Throws Error(UnknownSuite).
SuiteReport run_suite(std::string_view name, const FuzzConfig& cfg);

/// Re-checks a single instance as recorded in a Failure ({"suite", "instance"}).
SuiteReport replay(const Json& record);

/// Generated instance for `seq` without checking it.
Json generate_instance(std::string_view name, const FuzzConfig& cfg, std::size_t seq);

using GridEvaluator = std::function<Rational(std::span<const Rational>)>;

/// The first `count` non-negative integers not in `avoid`.
std::vector<Rational> grid_points(int count, std::span<const Rational> avoid);

/// Evaluates both sides on the full grid of (per_var_degree + 1)^vars points
/// and returns the first point where they differ. Agreement everywhere
/// proves the identity when both sides have degree <= per_var_degree in
/// each variable.
std::optional<std::vector<Rational>> grid_find_mismatch(const GridEvaluator& lhs,
                                                        const GridEvaluator& rhs, int vars,
                                                        int per_var_degree,
                                                        std::span<const Rational> avoid);

bool grid_check_identity(const GridEvaluator& lhs, const GridEvaluator& rhs, int vars,
                         int per_var_degree, std::span<const Rational> avoid);

}  // namespace sylsum

#endif
