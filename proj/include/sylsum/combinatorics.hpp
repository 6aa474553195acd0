#ifndef SYLSUM_COMBINATORICS_HPP
#define SYLSUM_COMBINATORICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace sylsum {

/// Sorted set of 1-based indices.
using IndexSet = std::vector<int>;

/// Lexicographic stream of the k-subsets of {1, ..., n}. Empty when k > n;
/// a single empty subset when k = 0. reset() restarts the stream.
class SubsetStream {
 public:
  SubsetStream(int n, int k);

  std::optional<IndexSet> next();
  void reset();

 private:
  int n_;
  int k_;
  IndexSet current_;
  bool started_ = false;
  bool done_ = false;
};

/// All k-subsets of {1, ..., n} in lexicographic order.
std::vector<IndexSet> enum_subsets(int n, int k);

/// Calls fn(const IndexSet&) for every k-subset of `pool` (pool sorted),
/// in lexicographic order of the chosen positions.
template <class Fn>
void for_each_subset_of(const IndexSet& pool, int k, Fn&& fn) {
  SubsetStream stream(static_cast<int>(pool.size()), k);
  IndexSet picked;
  while (auto pos = stream.next()) {
    picked.clear();
    for (int p : *pos) picked.push_back(pool[p - 1]);
    fn(picked);
  }
}

/// Binomial coefficient; 0 when p > d. Throws std::overflow_error past 64 bits.
std::uint64_t binom(int d, int p);

/// Ordered partition of {1, ..., r} into sorted, disjoint blocks. r = 0 is
/// the empty range; its only partition has every block empty.
struct IndexPartition {
  int r = 0;
  std::vector<IndexSet> blocks;

  /// Throws Error(InvalidPartition) if blocks are unsorted, overlap or do
  /// not cover {1, ..., r} exactly.
  void validate() const;
  int block_size(std::size_t i) const {
    return i < blocks.size() ? static_cast<int>(blocks[i].size()) : 0;
  }

  friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
};

/// Every ordered partition of {1, ..., r} into `block_count` blocks
/// (block_count^r of them), in base-`block_count` counting order.
std::vector<IndexPartition> all_ordered_partitions(int r, int block_count);

/// sg_r(R) = (-1)^(sum_l (i_l - l)): parity of moving R to the front of
/// (1, ..., r) while keeping the relative order of everything else.
/// Throws Error(IndexOutOfRange) for indices outside 1..r.
int sg_set(int r, const IndexSet& subset);

/// Sign of the permutation obtained by concatenating the blocks.
int sg_partition(const IndexPartition& p);

/// The sign attached to a partition (R1, R2, R3) in the multiset Sylvester sum:
///   (-1)^(m'(m-d) + r1(n-d+r2+r3) + r2(mbar-1) + r3(m'+n'-d-1) + r2 r3) * sg(R1, R2, R3)
/// with m' = m - mbar, n' = n - nbar. P must partition {1, ..., max(0, m'+n'-d)}
/// into three blocks; otherwise Error(InvalidPartition).
int sigma_sign(int m, int n, int mbar, int nbar, int d, const IndexPartition& p);

/// Checks sg_{r-s}(R1 - s) * sg_r(R2) * sg_r(R3) = (-1)^(r1(r2+r3+s) + r2 r3)
/// for one three-block partition of {1, ..., r} and a shift s.
/// Throws Error(ShiftOutOfRange) if R1 - s is not inside {1, ..., r-s}.
bool check_sign_lemma(int r, int s, const IndexPartition& p);

}  // namespace sylsum

#endif
