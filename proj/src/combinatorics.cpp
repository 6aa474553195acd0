#include "sylsum/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "sylsum/errors.hpp"

namespace sylsum {

namespace {

int parity_sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

SubsetStream::SubsetStream(int n, int k) : n_(n), k_(k) {}

void SubsetStream::reset() {
  current_.clear();
  started_ = false;
  done_ = false;
}

std::optional<IndexSet> SubsetStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (k_ < 0 || k_ > n_) {
      done_ = true;
      return std::nullopt;
    }
    current_.resize(k_);
    for (int i = 0; i < k_; ++i) current_[i] = i + 1;
    return current_;
  }
  // Rightmost position that can still advance.
  int i = k_ - 1;
  while (i >= 0 && current_[i] == n_ - k_ + i + 1) --i;
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  ++current_[i];
  for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  return current_;
}

std::vector<IndexSet> enum_subsets(int n, int k) {
  std::vector<IndexSet> out;
  SubsetStream stream(n, k);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::uint64_t binom(int d, int p) {
  if (p < 0 || d < 0 || p > d) return 0;
  if (p > d - p) p = d - p;
  std::uint64_t acc = 1;
  for (int i = 1; i <= p; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(d - p + i);
    if (acc > UINT64_MAX / factor) throw std::overflow_error("binom overflow");
    acc = acc * factor / static_cast<std::uint64_t>(i);
  }
  return acc;
}

void IndexPartition::validate() const {
  if (r < 0) throw Error(Errc::InvalidPartition, "negative range size");
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  int total = 0;
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int v = block[i];
      if (v < 1 || v > r) {
        throw Error(Errc::InvalidPartition,
                    "index " + std::to_string(v) + " outside 1.." + std::to_string(r));
      }
      if (i > 0 && block[i - 1] >= v) throw Error(Errc::InvalidPartition, "block not sorted");
      if (seen[v]) throw Error(Errc::InvalidPartition, "index " + std::to_string(v) + " repeated");
      seen[v] = true;
      ++total;
    }
  }
  if (total != r) throw Error(Errc::InvalidPartition, "blocks do not cover 1.." + std::to_string(r));
}

std::vector<IndexPartition> all_ordered_partitions(int r, int block_count) {
  std::vector<IndexPartition> out;
  if (block_count <= 0) return out;
  std::vector<int> label(static_cast<std::size_t>(r), 0);
  while (true) {
    IndexPartition p{r, std::vector<IndexSet>(block_count)};
    for (int i = 0; i < r; ++i) p.blocks[label[i]].push_back(i + 1);
    out.push_back(std::move(p));
    // Increment the labels as a base-block_count counter, last index fastest.
    int pos = r - 1;
    while (pos >= 0 && label[pos] == block_count - 1) label[pos--] = 0;
    if (pos < 0) break;
    ++label[pos];
  }
  return out;
}

int sg_set(int r, const IndexSet& subset) {
  long long exponent = 0;
  for (std::size_t l = 0; l < subset.size(); ++l) {
    const int i = subset[l];
    if (i < 1 || i > r) {
      throw Error(Errc::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(r));
    }
    exponent += i - static_cast<long long>(l + 1);
  }
  return parity_sign(exponent);
}

int sg_partition(const IndexPartition& p) {
  p.validate();
  std::vector<int> perm;
  perm.reserve(p.r);
  for (const auto& block : p.blocks) perm.insert(perm.end(), block.begin(), block.end());
  long long inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return parity_sign(inversions);
}

int sigma_sign(int m, int n, int mbar, int nbar, int d, const IndexPartition& p) {
  const int mp = m - mbar;
  const int np = n - nbar;
  const int range = mp + np - d > 0 ? mp + np - d : 0;
  if (p.r != range || p.blocks.size() != 3) {
    throw Error(Errc::InvalidPartition, "expected a three-block partition of 1.." +
                                            std::to_string(range));
  }
  p.validate();
  const long long r1 = p.block_size(0);
  const long long r2 = p.block_size(1);
  const long long r3 = p.block_size(2);
  const long long exponent = static_cast<long long>(mp) * (m - d) + r1 * (n - d + r2 + r3) +
                             r2 * (mbar - 1) + r3 * (mp + np - d - 1) + r2 * r3;
  return parity_sign(exponent) * sg_partition(p);
}

bool check_sign_lemma(int r, int s, const IndexPartition& p) {
  if (p.r != r || p.blocks.size() != 3) {
    throw Error(Errc::InvalidPartition, "expected a three-block partition of 1.." +
                                            std::to_string(r));
  }
  p.validate();
  if (s < 0 || s > r) throw Error(Errc::ShiftOutOfRange, "shift outside 0..r");
  IndexSet shifted;
  for (int i : p.blocks[0]) {
    if (i - s < 1 || i - s > r - s) {
      throw Error(Errc::ShiftOutOfRange, "shifted index " + std::to_string(i - s) +
                                             " outside 1.." + std::to_string(r - s));
    }
    shifted.push_back(i - s);
  }
  const long long r1 = p.block_size(0);
  const long long r2 = p.block_size(1);
  const long long r3 = p.block_size(2);
  const int lhs = sg_set(r - s, shifted) * sg_set(r, p.blocks[1]) * sg_set(r, p.blocks[2]);
  const int rhs = parity_sign(r1 * (r2 + r3 + s) + r2 * r3);
  return lhs == rhs;
}

}  // namespace sylsum
