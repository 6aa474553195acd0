#include "sylsum/schur.hpp"

#include <unordered_map>

#include "sylsum/errors.hpp"
#include "sylsum/matrix.hpp"

namespace sylsum {

namespace {

std::size_t point_count(const SchurSpec& spec) {
  return spec.points.size() + (spec.with_x ? 1 : 0);
}

void check_removed(std::size_t k, const IndexSet& removed, std::size_t columns) {
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (removed[i] < 1 || static_cast<std::size_t>(removed[i]) > k ||
        (i > 0 && removed[i] <= removed[i - 1])) {
      throw Error(Errc::IndexOutOfRange,
                  "removed rows must be sorted within 1.." + std::to_string(k));
    }
  }
  if (columns > k || removed.size() != k - columns) {
    throw Error(Errc::InconsistentRemovalCount,
                std::to_string(removed.size()) + " removed rows with k=" + std::to_string(k) +
                    " and " + std::to_string(columns) + " points");
  }
}

// Laplace expansion along rows, memoised on the set of columns already used.
// Kept separate from det_q so the classical check does not share its code path.
Rational laplace_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  std::unordered_map<unsigned, Rational> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned used) -> Rational {
    if (row == n) return Rational(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Rational acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!a[row][c].is_zero()) {
        Rational term = a[row][c] * self(self, row + 1, used | (1u << c));
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u);
}

}  // namespace

void SchurSpec::validate() const { check_removed(k, removed, point_count(*this)); }

Rational schur_value_ordered(std::size_t k, const IndexSet& removed,
                             std::span<const RootEntry> blocks) {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.mult;
  check_removed(k, removed, r);
  if (r == 0) {
    if (k == 0) return Rational(1);
    throw Error(Errc::EmptyPoints, "Schur ratio of an empty point set with k > 0");
  }
  const Rational numerator = det_q(remove_rows(vandermonde_confluent(k, blocks), removed));
  const Rational denominator = det_q(vandermonde_confluent(r, blocks));
  return numerator / denominator;
}

Rational schur_value(const SchurSpec& spec) {
  if (spec.with_x) {
    throw Error(Errc::ValidationError, "schur_value needs a spec without the symbolic point");
  }
  return schur_value_ordered(spec.k, spec.removed, spec.points.entries());
}

UPoly schur_poly_x(const SchurSpec& spec) {
  if (!spec.with_x) {
    throw Error(Errc::ValidationError, "schur_poly_x needs a spec with the symbolic point");
  }
  spec.validate();
  const std::size_t columns = spec.points.size() + 1;
  const UPoly numerator =
      det_p(remove_rows(vandermonde_confluent_with_x(spec.k, spec.points), spec.removed));
  const UPoly denominator = det_p(vandermonde_confluent_with_x(columns, spec.points));
  return poly_exact_div(numerator, denominator);
}

bool schur_consistency_check(std::size_t k, const IndexSet& removed, const RootMultiset& x) {
  if (!x.is_set()) {
    throw Error(Errc::MultiplicityNotOne, "classical Schur ratio needs distinct points");
  }
  const SchurSpec spec{k, removed, x, false};
  const Rational confluent = schur_value(spec);

  const std::vector<Rational> pts = x.values();
  const std::size_t r = pts.size();
  if (r == 0) return confluent == Rational(1);
  std::vector<unsigned> kept;
  for (std::size_t t = 1, next = 0; t <= k; ++t) {
    if (next < removed.size() && static_cast<std::size_t>(removed[next]) == t) {
      ++next;
      continue;
    }
    kept.push_back(static_cast<unsigned>(k - t));
  }
  std::vector<std::vector<Rational>> num(r, std::vector<Rational>(r));
  std::vector<std::vector<Rational>> den(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      num[i][j] = pts[j].pow(kept[i]);
      den[i][j] = pts[j].pow(static_cast<unsigned>(r - 1 - i));
    }
  }
  return confluent == laplace_det(num) / laplace_det(den);
}

}  // namespace sylsum
