#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sylsum/combinatorics.hpp"
#include "sylsum/errors.hpp"

using namespace sylsum;

namespace {

// Counts adjacent swaps while bubbling the target order into place.
int simulated_sign(std::vector<int> target) {
  int swaps = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j + 1 < target.size() - i; ++j) {
      if (target[j] > target[j + 1]) {
        std::swap(target[j], target[j + 1]);
        ++swaps;
      }
    }
  }
  return swaps % 2 == 0 ? 1 : -1;
}

// Sign of moving `subset` to the front of (1..r), others keeping their order.
int simulated_sg_set(int r, const IndexSet& subset) {
  std::vector<int> order = subset;
  for (int i = 1; i <= r; ++i) {
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) order.push_back(i);
  }
  return simulated_sign(order);
}

IndexSet complement(int r, const IndexSet& s) {
  IndexSet out;
  for (int i = 1; i <= r; ++i) {
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(EnumSubsets, Examples) {
  EXPECT_EQ(enum_subsets(3, 2), (std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(enum_subsets(4, 0), (std::vector<IndexSet>{{}}));
  EXPECT_TRUE(enum_subsets(2, 3).empty());
}

TEST(EnumSubsets, CountsAndOrder) {
  for (int n = 0; n <= 8; ++n) {
    std::set<IndexSet> all;
    for (int k = 0; k <= n; ++k) {
      const auto subsets = enum_subsets(n, k);
      EXPECT_EQ(subsets.size(), binom(n, k));
      EXPECT_TRUE(std::is_sorted(subsets.begin(), subsets.end()));
      for (const auto& s : subsets) {
        EXPECT_EQ(static_cast<int>(s.size()), k);
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
        all.insert(s);
      }
    }
    EXPECT_EQ(all.size(), std::size_t{1} << n);
  }
}

TEST(SubsetStream, ResetRestarts) {
  SubsetStream s(4, 2);
  const auto first = s.next();
  s.next();
  s.reset();
  EXPECT_EQ(s.next(), first);
}

TEST(Binom, Examples) {
  EXPECT_EQ(binom(4, 2), 6u);
  EXPECT_EQ(binom(9, 0), 1u);
  EXPECT_EQ(binom(2, 3), 0u);
  EXPECT_EQ(binom(60, 30), 118264581564861424ull);
  EXPECT_THROW(binom(200, 100), std::overflow_error);
}

TEST(SgSet, Examples) {
  EXPECT_EQ(sg_set(5, {}), 1);
  EXPECT_EQ(sg_set(3, {2}), -1);
  EXPECT_EQ(sg_set(4, {1, 2}), 1);
  try {
    sg_set(3, {4});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(SgSet, ClosedFormMatchesTranspositionCount) {
  for (int r = 0; r <= 8; ++r) {
    for (int k = 0; k <= r; ++k) {
      for (const auto& s : enum_subsets(r, k)) {
        EXPECT_EQ(sg_set(r, s), simulated_sg_set(r, s));
      }
    }
  }
}

TEST(SgSet, ComplementaryBlocks) {
  for (int r = 1; r <= 8; ++r) {
    for (int k = 0; k <= r; ++k) {
      for (const auto& s : enum_subsets(r, k)) {
        const int expected = (k * (r - k)) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(sg_set(r, s) * sg_set(r, complement(r, s)), expected);
        EXPECT_EQ(sg_partition({r, {s, complement(r, s)}}), sg_set(r, s));
      }
    }
  }
}

TEST(SgPartition, Examples) {
  EXPECT_EQ(sg_partition({3, {{1, 2}, {3}, {}}}), 1);
  EXPECT_EQ(sg_partition({3, {{2}, {1, 3}}}), -1);
  EXPECT_EQ(sg_partition({4, {{}, {}, {1, 2, 3, 4}}}), 1);
}

TEST(SgPartition, MatchesTranspositionCount) {
  for (int r = 0; r <= 6; ++r) {
    for (const auto& p : all_ordered_partitions(r, 3)) {
      std::vector<int> order;
      for (const auto& b : p.blocks) order.insert(order.end(), b.begin(), b.end());
      EXPECT_EQ(sg_partition(p), simulated_sign(order));
    }
  }
}

TEST(IndexPartition, Validation) {
  EXPECT_NO_THROW((IndexPartition{3, {{1}, {2, 3}, {}}}.validate()));
  EXPECT_THROW((IndexPartition{3, {{1}, {1, 3}, {}}}.validate()), Error);
  EXPECT_THROW((IndexPartition{3, {{1}, {3}, {}}}.validate()), Error);
  EXPECT_THROW((IndexPartition{3, {{2, 1}, {3}, {}}}.validate()), Error);
  EXPECT_EQ(all_ordered_partitions(0, 3).size(), 1u);
  EXPECT_EQ(all_ordered_partitions(4, 3).size(), 81u);
}

TEST(SigmaSign, Examples) {
  // m' + n' - d <= 0: only the exponent m'(m-d) survives.
  EXPECT_EQ(sigma_sign(4, 3, 3, 3, 2, {0, {{}, {}, {}}}), 1);   // m'=1, m-d=2
  EXPECT_EQ(sigma_sign(4, 4, 4, 2, 2, {0, {{}, {}, {}}}), 1);   // m'=0
  EXPECT_EQ(sigma_sign(4, 3, 3, 2, 2, {0, {{}, {}, {}}}), 1);   // m'=1, n'=1, m-d=2
  EXPECT_EQ(sigma_sign(3, 4, 2, 3, 2, {0, {{}, {}, {}}}), -1);  // m'=1, m-d=1
  EXPECT_EQ(sigma_sign(3, 3, 2, 2, 1, {1, {{}, {1}, {}}}), -1);
  try {
    sigma_sign(3, 3, 2, 2, 1, {2, {{}, {1, 2}, {}}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidPartition);
  }
}

TEST(CheckSignLemma, Examples) {
  for (const auto& p : all_ordered_partitions(3, 3)) EXPECT_TRUE(check_sign_lemma(3, 0, p));
  EXPECT_TRUE(check_sign_lemma(1, 0, {1, {{1}, {}, {}}}));
  EXPECT_TRUE(check_sign_lemma(4, 1, {4, {{2}, {1, 3}, {4}}}));
  try {
    check_sign_lemma(4, 2, {4, {{2}, {1, 3}, {4}}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShiftOutOfRange);
  }
}

TEST(CheckSignLemma, ExhaustiveAgainstSimulatedSigns) {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& p : all_ordered_partitions(r, 3)) {
      for (int s = 0; s <= r; ++s) {
        IndexSet shifted;
        bool valid = true;
        for (int i : p.blocks[0]) {
          valid = valid && i - s >= 1;
          shifted.push_back(i - s);
        }
        if (!valid) {
          EXPECT_THROW(check_sign_lemma(r, s, p), Error);
          continue;
        }
        EXPECT_TRUE(check_sign_lemma(r, s, p));
        const int r1 = p.block_size(0);
        const int r2 = p.block_size(1);
        const int r3 = p.block_size(2);
        const int lhs = simulated_sg_set(r - s, shifted) * simulated_sg_set(r, p.blocks[1]) *
                        simulated_sg_set(r, p.blocks[2]);
        const int exponent = r1 * (r2 + r3 + s) + r2 * r3;
        EXPECT_EQ(lhs, exponent % 2 == 0 ? 1 : -1);
      }
    }
  }
}
