#ifndef SYLSUM_SYLVESTER_HPP
#define SYLSUM_SYLVESTER_HPP

#include <functional>
#include <span>
#include <vector>

#include "sylsum/combinatorics.hpp"
#include "sylsum/rational.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/upoly.hpp"

namespace sylsum {

/// 0 <= d <= min(m, n) when m != n, and 0 <= d < m when m == n.
bool in_degree_window(int m, int n, int d);

/// Order-d subresultant of f and g as the determinant of the
/// (m+n-2d)-square matrix whose first m+n-2d-1 columns hold shifted
/// coefficients and whose last column holds x^(n-d-i) f and x^(m-d-i) g.
/// f and g need not be monic. Throws Error(DegreeWindow) for d outside the
/// window and Error(ValidationError) for a constant or zero input.
UPoly sres_det(const UPoly& f, const UPoly& g, int d);

/// Sylvester's double sum over p-subsets of A and q-subsets of B.
/// A and B must be sets (Error(MultiplicityNotOne)).
UPoly syl_double(const RootMultiset& a, const RootMultiset& b, int p, int q);

/// Sylvester's single sum: sum over A1 + A2 = A, |A1| = d, of
/// R(A2, B) R(x, A1) / R(A1, A2). A must be a set; B may repeat values.
UPoly syl_single(const RootMultiset& a, const RootMultiset& b, int d);

/// One summand of the multiset Sylvester sum, kept for tracing.
struct SylmTerm {
  IndexPartition partition;  // (R1, R2, R3)
  SubsetSelection a_prime;   // A' inside the distinct values of A
  SubsetSelection b_prime;   // B' inside the distinct values of B
  int sign = 1;
  UPoly value;               // the full signed summand
};

/// Every summand of the multiset Sylvester sum, in enumeration order:
/// block sizes (|R1|, |R2|, |R3|) ascending, then R1 and R2 lexicographic,
/// then A' and B' lexicographic. Throws Error(DegreeWindow).
std::vector<SylmTerm> sylm_terms(const RootMultiset& a, const RootMultiset& b, int d);

/// Sum of sylm_terms. Sres_d(f, g) = (-1)^(d(m-d)) sylm(A, B, d) for the
/// monic f, g with root multisets A, B.
UPoly sylm(const RootMultiset& a, const RootMultiset& b, int d);

/// The two-index multiset sum valid for m' + n' <= d, computed directly
/// from subsets (no partitions, no Schur factors). With `force` the range
/// check on d is skipped; the result then carries no meaning beyond being
/// well defined (needs d - m' <= mbar and m' <= nbar).
UPoly sylm_large_d(const RootMultiset& a, const RootMultiset& b, int d, bool force = false);

/// Single sum with a set of variables X evaluated at the points xs:
/// sum over A1 + A2 = A, |A1| = d, of R(A2, B) R(X, A1) / R(A1, A2).
Rational single_sum_eval(const RootMultiset& a, const RootMultiset& b, int d,
                         std::span<const Rational> xs);

/// (-1)^(d(|A|-d)) sum over B1 + B2 = B, |B1| = d, of R(A, B2) R(X, B1) / R(B1, B2).
/// Throws Error(MultiplicityNotOne) if B repeats a value and
/// Error(TooFewElements) if |B| < d.
Rational exchange_rhs_eval(const RootMultiset& a, const RootMultiset& b, int d,
                           std::span<const Rational> xs);

/// Sum over E1 + E2 + E3 = E, |E1| = d, |E2| = m - d, of
/// R(A, E3) R(E2, B) R(X, E1) / (R(E1, E2) R(E1, E3) R(E2, E3)).
/// Throws Error(CardinalityTooSmall) unless |E| >= max(|X|+d, m+n-d, m).
Rational apery_jouanolou_rhs(const RootMultiset& a, const RootMultiset& b, int d,
                             const RootMultiset& e, std::span<const Rational> xs);

using SymmetricEvaluator = std::function<Rational(std::span<const Rational>)>;

/// Symmetric interpolation at X = xs: sum over d-subsets E' of E of
/// h(E \ E') R(X, E') / R(E \ E', E'). Requires |xs| = |E| - d
/// (Error(ArityMismatch)) and 0 <= d < |E|.
Rational sym_interp_eval(const RootMultiset& e, int d, const SymmetricEvaluator& h,
                         std::span<const Rational> xs);

}  // namespace sylsum

#endif
