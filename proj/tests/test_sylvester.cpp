#include <gtest/gtest.h>

#include <tuple>

#include "sylsum/combinatorics.hpp"
#include "sylsum/errors.hpp"
#include "sylsum/sylvester.hpp"
#include "test_support.hpp"

using namespace sylsum;
using namespace sylsum::testing;

namespace {

Rational pairwise(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Rational p(1);
  for (const auto& x : xs)
    for (const auto& y : ys) p *= x - y;
  return p;
}

// Both sides of the exchange identity by bitmask enumeration over plain vectors.
Rational brute_single_sum(const std::vector<Rational>& a, const std::vector<Rational>& b, int d,
                          const std::vector<Rational>& xs) {
  Rational total;
  const int m = static_cast<int>(a.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    std::vector<Rational> a1, a2;
    for (int i = 0; i < m; ++i) ((mask >> i) & 1u ? a1 : a2).push_back(a[i]);
    total += pairwise(a2, b) * pairwise(xs, a1) / pairwise(a1, a2);
  }
  return total;
}

Rational brute_exchange(const std::vector<Rational>& a, const std::vector<Rational>& b, int d,
                        const std::vector<Rational>& xs) {
  Rational total;
  const int n = static_cast<int>(b.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    std::vector<Rational> b1, b2;
    for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? b1 : b2).push_back(b[i]);
    total += pairwise(a, b2) * pairwise(xs, b1) / pairwise(b1, b2);
  }
  return (d * (static_cast<int>(a.size()) - d)) % 2 == 0 ? total : -total;
}

UPoly signed_poly(long long e, const UPoly& p) { return e % 2 == 0 ? p : -p; }

struct Triple {
  Rational a1, a2, b1;
};

const std::vector<Triple> kTriples = {
    {Q(0), Q(1), Q(2)}, {Q(1, 2), Q(-3), Q(5)}, {Q(-2), Q(7, 3), Q(4, 5)}, {Q(3), Q(-1, 4), Q(0)}};

}  // namespace

TEST(SresDet, Examples) {
  EXPECT_EQ(sres_det(P({2, -3, 1}), P({6, -5, 1}), 1), P({4, -2}));
  const UPoly f3 = P({-6, 11, -6, 1});
  const UPoly g2 = P({12, -7, 1});
  EXPECT_EQ(sres_det(f3, g2, 2), g2);
  const UPoly f = P({0, 1, -2, 1});
  const UPoly g = P({-8, 12, -6, 1});
  EXPECT_EQ(sres_det(f, g, 2), g - f);
}

TEST(SresDet, WindowAndInputValidation) {
  const UPoly f = P({1, 0, 1});
  const UPoly g = P({-1, 0, 1});
  for (int d : {2, 3, -1}) {
    try {
      sres_det(f, g, d);
      ADD_FAILURE() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegreeWindow);
    }
  }
  EXPECT_THROW(sres_det(P({3}), g, 0), Error);
  EXPECT_FALSE(in_degree_window(3, 3, 3));
  EXPECT_TRUE(in_degree_window(3, 2, 2));
  EXPECT_TRUE(in_degree_window(2, 3, 2));
}

TEST(SresDet, BoundaryFacts) {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 100; ++it) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const RootMultiset a = random_multiset(rng, m, 6);
    const RootMultiset b = random_multiset(rng, n, 6);
    const UPoly f = poly_from_roots(a);
    const UPoly g = poly_from_roots(b);
    EXPECT_EQ(sres_det(f, g, 0), UPoly(rprod(a, b)));
    if (n < m) EXPECT_EQ(sres_det(f, g, n), g);
    if (m < n) EXPECT_EQ(sres_det(f, g, m), f);
    for (int d = 0; d <= std::min(m, n); ++d) {
      if (!in_degree_window(m, n, d)) continue;
      const UPoly s = sres_det(f, g, d);
      if (!s.is_zero()) EXPECT_LE(*s.degree(), static_cast<std::size_t>(d));
      // f occupies n-d rows, so scaling f scales Sres by c^{n-d}.
      EXPECT_EQ(sres_det(Q(2) * f, g, d), Q(2).pow(static_cast<unsigned>(n - d)) * s);
    }
  }
}

TEST(SylDouble, Examples) {
  const RootMultiset a = MS("1,2");
  EXPECT_EQ(syl_double(a, MS("5,7"), 0, 0), UPoly(rprod(a, MS("5,7"))));
  EXPECT_EQ(syl_double(a, MS("2,3"), 1, 0), P({-4, 2}));
  EXPECT_EQ(syl_double(a, MS("3"), 0, 1), -syl_single(a, MS("3"), 1));
  EXPECT_THROW(syl_double(MS("1:2"), MS("3"), 1, 0), Error);
}

TEST(SylSingle, Examples) {
  const RootMultiset a = MS("1,-2,5");
  const RootMultiset b = MS("3,4");
  EXPECT_EQ(syl_single(a, b, 3), poly_from_roots(a));
  EXPECT_EQ(syl_single(a, b, 0), UPoly(rprod(a, b)));
  EXPECT_EQ(syl_single(MS("1,2"), MS("2,3"), 1), P({-4, 2}));
  try {
    syl_single(MS("1:2"), b, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MultiplicityNotOne);
  }
}

TEST(Sylm, FirstExampleAgreesWithExplicitFormula) {
  for (const auto& t : kTriples) {
    const RootMultiset a({{t.a1, 1}, {t.a2, 2}});
    const RootMultiset b({{t.b1, 2}});
    const UPoly g = poly_from_roots(b);
    const UPoly x = X();
    const UPoly explicit_form =
        -(t.a2 - t.b1) / (t.a1 - t.a2) * ((x - t.a1) * (x - t.b1)) -
        (t.a1 - t.b1) / (t.a2 - t.a1) * ((x - t.a2) * (x - t.b1));
    EXPECT_EQ(sylm(a, b, 2), g);
    EXPECT_EQ(sylm(a, b, 2), explicit_form);
    EXPECT_EQ(sylm_large_d(a, b, 2), g);
    EXPECT_EQ(sres_det(poly_from_roots(a), g, 2), g);
  }
}

TEST(Sylm, SecondExampleAgreesWithExplicitFormula) {
  for (const auto& t : kTriples) {
    const RootMultiset a({{t.a1, 1}, {t.a2, 2}});
    const RootMultiset b({{t.b1, 3}});
    const UPoly f = poly_from_roots(a);
    const UPoly g = poly_from_roots(b);
    const UPoly x = X();
    const UPoly explicit_form =
        (t.a2 - t.b1) * ((x - t.a1) * (x - t.a2)) -
        (t.a1 - t.b1) * (t.a1 - t.b1) / (t.a2 - t.a1) * ((x - t.a2) * (x - t.b1)) -
        (t.a2 - t.b1) * (t.a2 - t.b1) / (t.a1 - t.a2) * ((x - t.a1) * (x - t.b1));
    EXPECT_EQ(sylm(a, b, 2), g - f);
    EXPECT_EQ(sylm(a, b, 2), explicit_form);
    EXPECT_EQ(sres_det(f, g, 2), g - f);
  }
}

TEST(Sylm, NegativeCaseOfTheTwoIndexSum) {
  for (const auto& t : kTriples) {
    const RootMultiset a({{t.a1, 1}, {t.a2, 2}});
    const RootMultiset b({{t.b1, 3}});
    EXPECT_THROW(sylm_large_d(a, b, 2), Error);
    const UPoly forced = sylm_large_d(a, b, 2, true);
    EXPECT_TRUE(poly_divmod(forced, UPoly::linear_factor(t.b1)).second.is_zero());
    EXPECT_NE(forced, sres_det(poly_from_roots(a), poly_from_roots(b), 2));
  }
}

TEST(Sylm, SetsCollapseToSingleSum) {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 60; ++it) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto vals = distinct_values(rng, m + n, 9);
    const RootMultiset a = RootMultiset::from_values(std::span(vals).subspan(0, m));
    const RootMultiset b = RootMultiset::from_values(std::span(vals).subspan(m));
    for (int d = 0; d <= std::min(m, n); ++d) {
      if (!in_degree_window(m, n, d)) continue;
      EXPECT_EQ(sylm(a, b, d), syl_single(a, b, d));
      EXPECT_EQ(sylm_large_d(a, b, d), syl_single(a, b, d));
    }
  }
}

TEST(Sylm, MatchesDeterminantOnHandPickedMultisets) {
  const std::vector<std::tuple<const char*, const char*>> cases = {
      {"1:3", "2:3"},         {"0:2,1:2", "3:3"},     {"1:4", "-1:2,2"},
      {"1/2:2,3", "1/2,4:3"}, {"0,1,2:3", "2:2,5:2"}, {"-1:5", "1:4"},
  };
  for (const auto& [as, bs] : cases) {
    const RootMultiset a = MS(as);
    const RootMultiset b = MS(bs);
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    for (int d = 0; d <= std::min(m, n); ++d) {
      if (!in_degree_window(m, n, d)) continue;
      EXPECT_EQ(sres_det(poly_from_roots(a), poly_from_roots(b), d),
                signed_poly(static_cast<long long>(d) * (m - d), sylm(a, b, d)))
          << as << " | " << bs << " d=" << d;
    }
  }
}

TEST(Sylm, LargeDRegimeUsesOnlyTheEmptyPartition) {
  const RootMultiset a = MS("1:2,3,4");
  const RootMultiset b = MS("2:2,5,6");
  for (int d = 2; d <= 3; ++d) {
    for (const auto& term : sylm_terms(a, b, d)) {
      EXPECT_EQ(term.partition.r, 0);
      EXPECT_EQ(term.b_prime.chosen().size(), 1u);
    }
    EXPECT_EQ(sylm(a, b, d), sylm_large_d(a, b, d));
  }
}

TEST(Sylm, TermOrderIsCanonical) {
  // d = 2 >= mbar + nbar, so R1 can be non-empty.
  const RootMultiset a = MS("1:4");
  const RootMultiset b = MS("2:3");
  const auto terms = sylm_terms(a, b, 2);
  ASSERT_FALSE(terms.empty());
  auto key = [](const SylmTerm& t) {
    return std::make_tuple(t.partition.block_size(0), t.partition.block_size(1),
                           t.partition.block_size(2), t.partition.blocks, t.a_prime.chosen(),
                           t.b_prime.chosen());
  };
  for (std::size_t i = 1; i < terms.size(); ++i) EXPECT_LT(key(terms[i - 1]), key(terms[i]));
  bool has_r1 = false;
  for (const auto& t : terms) has_r1 = has_r1 || t.partition.block_size(0) > 0;
  EXPECT_TRUE(has_r1);
}

TEST(Sylm, RejectsOutOfWindow) {
  try {
    sylm(MS("1,2"), MS("3,4"), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeWindow);
  }
}

TEST(SingleSumEval, Examples) {
  const RootMultiset a = MS("1,2,3");
  const RootMultiset b = MS("5");
  const std::vector<Rational> one = {Q(7, 2)};
  EXPECT_EQ(single_sum_eval(a, b, 2, one), syl_single(a, b, 2).eval(one[0]));
  const std::vector<Rational> xs = {Q(4), Q(7)};
  EXPECT_EQ(single_sum_eval(a, b, 1, xs), exchange_rhs_eval(a, b, 1, xs));
  EXPECT_EQ(single_sum_eval(a, b, 1, xs),
            brute_exchange(a.expanded(), b.expanded(), 1, xs));
  // |B| = 1 < d = 2 <= |A| = 3, |X| <= 0.
  EXPECT_EQ(single_sum_eval(a, b, 2, {}), Q(0));
}

TEST(ExchangeRhs, Examples) {
  const RootMultiset a = MS("1,2,3");
  EXPECT_EQ(exchange_rhs_eval(a, MS("5,6"), 0, {}), rprod(a, MS("5,6")));
  const std::vector<Rational> xs = {Q(4), Q(-1)};
  EXPECT_EQ(exchange_rhs_eval(a, MS("5"), 1, xs), Q(1) * (Q(4) - Q(5)) * (Q(-1) - Q(5)));
  try {
    exchange_rhs_eval(a, MS("5"), 2, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooFewElements);
  }
}

TEST(SingleSumEval, AgreesWithBruteForceBothSides) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 80; ++it) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int n = std::uniform_int_distribution<int>(0, 5)(rng);
    const auto vals = distinct_values(rng, m + n + 2, 9);
    const std::vector<Rational> av(vals.begin(), vals.begin() + m);
    const std::vector<Rational> bv(vals.begin() + m, vals.begin() + m + n);
    const int d = std::uniform_int_distribution<int>(0, m)(rng);
    const int room = std::max(0, std::min(2, m + n - 2 * d));
    const std::vector<Rational> xs(vals.end() - room, vals.end());
    const RootMultiset a = RootMultiset::from_values(av);
    const RootMultiset b = RootMultiset::from_values(bv);
    const Rational lhs = single_sum_eval(a, b, d, xs);
    EXPECT_EQ(lhs, brute_single_sum(av, bv, d, xs));
    if (m + n - 2 * d < 0) continue;
    if (n >= d) EXPECT_EQ(lhs, brute_exchange(av, bv, d, xs));
    else EXPECT_EQ(lhs, Q(0));
  }
}

TEST(AperyJouanolou, Examples) {
  const RootMultiset a = MS("1,2");
  const RootMultiset b = MS("3,4,5");
  const RootMultiset e = MS("10,11,12,13,14");
  EXPECT_EQ(apery_jouanolou_rhs(a, b, 0, e, {}), rprod(a, b));
  // |E| = m+n-d with one variable: the subresultant path.
  const RootMultiset e4 = MS("10,11,12,13");
  const Rational x0 = Q(7, 3);
  const std::vector<Rational> xs = {x0};
  const UPoly sres = sres_det(poly_from_roots(a), poly_from_roots(b), 1);
  EXPECT_EQ(apery_jouanolou_rhs(a, b, 1, e4, xs), signed_poly(1, sres).eval(x0));
  EXPECT_EQ(apery_jouanolou_rhs(a, b, 1, e4, xs), single_sum_eval(a, b, 1, xs));
  try {
    apery_jouanolou_rhs(a, b, 1, MS("10,11,12"), xs);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CardinalityTooSmall);
  }
}

TEST(SymInterp, Examples) {
  const RootMultiset e = MS("-1,2,3,7");
  const SymmetricEvaluator one = [](std::span<const Rational>) { return Q(1); };
  const SymmetricEvaluator e1 = [](std::span<const Rational> x) {
    Rational s;
    for (const auto& v : x) s += v;
    return s;
  };
  const std::vector<Rational> xs2 = {Q(5), Q(-4, 3)};
  const std::vector<Rational> xs3 = {Q(5), Q(-4, 3), Q(9)};
  EXPECT_EQ(sym_interp_eval(e, 2, one, xs2), Q(1));
  EXPECT_EQ(sym_interp_eval(e, 1, e1, xs3), Q(5) + Q(-4, 3) + Q(9));
  EXPECT_EQ(sym_interp_eval(e, 0, [](std::span<const Rational>) { return Q(-3); },
                            std::vector<Rational>{Q(1), Q(2), Q(4), Q(5)}),
            Q(-3));
  try {
    sym_interp_eval(e, 1, one, xs2);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::ArityMismatch);
  }
}
