#ifndef SYLSUM_ROOTSET_HPP
#define SYLSUM_ROOTSET_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sylsum/rational.hpp"
#include "sylsum/upoly.hpp"

namespace sylsum {

struct RootEntry {
  Rational value;
  std::size_t mult = 1;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

/// Multiset of rationals in canonical form: values strictly increasing,
/// multiplicities at least one. Construction sorts and merges.
class RootMultiset {
 public:
  RootMultiset() = default;
  /// Entries may be unsorted and repeat values; repeats are merged.
  /// Throws Error(ValidationError) on a zero multiplicity.
  explicit RootMultiset(std::vector<RootEntry> entries);
  /// Each value once.
  static RootMultiset from_values(std::span<const Rational> values);
  static RootMultiset from_values(std::initializer_list<Rational> values);

  const std::vector<RootEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Length counted with multiplicity.
  std::size_t size() const { return size_; }
  /// Number of distinct values (m-bar).
  std::size_t distinct_count() const { return entries_.size(); }
  /// size() - distinct_count() (m-prime).
  std::size_t excess_count() const { return size_ - entries_.size(); }
  bool is_set() const { return size_ == entries_.size(); }

  std::size_t multiplicity(const Rational& v) const;
  bool contains(const Rational& v) const { return multiplicity(v) > 0; }

  /// Values repeated according to multiplicity, ascending.
  std::vector<Rational> expanded() const;
  /// Distinct values, ascending.
  std::vector<Rational> values() const;

  /// Multiset sum (multiplicities add).
  RootMultiset merged(const RootMultiset& other) const;
  /// Multiset difference; throws Error(ValidationError) if other is not contained.
  RootMultiset minus(const RootMultiset& other) const;

  std::string to_string() const;

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

 private:
  std::vector<RootEntry> entries_;
  std::size_t size_ = 0;
};

/// A choice of distinct values of a parent multiset, by 1-based index into
/// the parent's sorted distinct values.
class SubsetSelection {
 public:
  /// Throws Error(IndexOutOfRange) unless indices are strictly increasing
  /// and within 1..parent.distinct_count().
  SubsetSelection(RootMultiset parent, std::vector<int> chosen);

  const RootMultiset& parent() const { return parent_; }
  const std::vector<int>& chosen() const { return chosen_; }

  /// Chosen values, each once.
  RootMultiset selected() const;
  /// Distinct parent values not chosen, each once.
  RootMultiset unselected() const;

 private:
  RootMultiset parent_;
  std::vector<int> chosen_;
};

/// Product of (x - y) over x in X, y in Y with multiplicity; 1 if either is empty.
Rational rprod(const RootMultiset& x, const RootMultiset& y);

/// Same product with the single point `point` in place of X.
Rational rprod_point(const Rational& point, const RootMultiset& y);

/// Product of (x_i - y) over every entry of `points` and y in Y.
Rational rprod_points(std::span<const Rational> points, const RootMultiset& y);

/// Monic polynomial prod (x - a) over a in A.
UPoly poly_from_roots(const RootMultiset& a);

/// R(x, X) with symbolic x; identical to poly_from_roots.
inline UPoly rprod_poly(const RootMultiset& x) { return poly_from_roots(x); }

/// Splits A into its distinct values and the remaining excess copies.
std::pair<RootMultiset, RootMultiset> multiset_split(const RootMultiset& a);

}  // namespace sylsum

#endif
