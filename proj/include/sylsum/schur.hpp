#ifndef SYLSUM_SCHUR_HPP
#define SYLSUM_SCHUR_HPP

#include <cstddef>
#include <span>

#include "sylsum/combinatorics.hpp"
#include "sylsum/rational.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/upoly.hpp"

namespace sylsum {

/// S_k^(R)(X): the k x r confluent Vandermonde matrix of X with the rows in R
/// deleted, divided by the square confluent Vandermonde matrix of X. With
/// with_x set, X is extended by one symbolic simple point x.
struct SchurSpec {
  std::size_t k = 0;
  IndexSet removed;
  RootMultiset points;
  bool with_x = false;

  /// Throws Error(IndexOutOfRange) or Error(InconsistentRemovalCount).
  void validate() const;
};

/// Throws Error(EmptyPoints) when there are no points but k > 0. The fully
/// degenerate case k = 0 with no points is 1.
Rational schur_value(const SchurSpec& spec);

/// schur_value with the confluent blocks taken in the given order rather
/// than ascending. Equal for any order; exposed for testing that fact.
Rational schur_value_ordered(std::size_t k, const IndexSet& removed,
                             std::span<const RootEntry> blocks);

/// Polynomial in the symbolic point. Throws Error(NotDivisible) if the
/// numerator determinant is not a multiple of the denominator, which would
/// mean a bug.
UPoly schur_poly_x(const SchurSpec& spec);

/// Compares schur_value on a set X with the classical bialternant computed
/// from an explicit power matrix and a separate determinant routine.
/// Throws Error(MultiplicityNotOne) if X has a repeated value.
bool schur_consistency_check(std::size_t k, const IndexSet& removed, const RootMultiset& x);

}  // namespace sylsum

#endif
