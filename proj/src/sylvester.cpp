#include "sylsum/sylvester.hpp"

#include <algorithm>
#include <string>

#include "sylsum/errors.hpp"
#include "sylsum/matrix.hpp"
#include "sylsum/schur.hpp"

namespace sylsum {

namespace {

void require_set(const RootMultiset& s, const char* name) {
  if (!s.is_set()) {
    throw Error(Errc::MultiplicityNotOne,
                std::string(name) + " = {" + s.to_string() + "} repeats a value");
  }
}

void require_window(int m, int n, int d) {
  if (!in_degree_window(m, n, d)) {
    throw Error(Errc::DegreeWindow, "d=" + std::to_string(d) + " outside the window for m=" +
                                        std::to_string(m) + ", n=" + std::to_string(n));
  }
}

int size_of(const RootMultiset& s) { return static_cast<int>(s.size()); }

IndexSet iota_set(int first, int last) {
  IndexSet out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

}  // namespace

bool in_degree_window(int m, int n, int d) {
  if (d < 0) return false;
  if (m != n) return d <= std::min(m, n);
  return d < m;
}

UPoly sres_det(const UPoly& f, const UPoly& g, int d) {
  if (f.is_constant() || g.is_constant()) {
    throw Error(Errc::ValidationError, "subresultant needs f and g of degree at least 1");
  }
  const int m = static_cast<int>(*f.degree());
  const int n = static_cast<int>(*g.degree());
  require_window(m, n, d);

  const int size = m + n - 2 * d;
  MatrixP mat(size, size);
  auto coefficient = [](const UPoly& p, int deg, int index) {
    return (index < 0 || index > deg) ? Rational(0) : p.coeff(static_cast<std::size_t>(index));
  };
  for (int i = 1; i <= n - d; ++i) {
    for (int j = 1; j < size; ++j) mat(i, j) = UPoly(coefficient(f, m, m - (j - i)));
    mat(i, size) = UPoly::monomial(static_cast<std::size_t>(n - d - i)) * f;
  }
  for (int i = 1; i <= m - d; ++i) {
    const int row = n - d + i;
    for (int j = 1; j < size; ++j) mat(row, j) = UPoly(coefficient(g, n, n - (j - i)));
    mat(row, size) = UPoly::monomial(static_cast<std::size_t>(m - d - i)) * g;
  }
  return det_p(mat);
}

UPoly syl_double(const RootMultiset& a, const RootMultiset& b, int p, int q) {
  require_set(a, "A");
  require_set(b, "B");
  const int m = size_of(a);
  const int n = size_of(b);
  if (p < 0 || p > m || q < 0 || q > n) {
    throw Error(Errc::ValidationError, "need 0 <= p <= m and 0 <= q <= n");
  }
  UPoly sum;
  SubsetStream a_stream(m, p);
  while (auto ai = a_stream.next()) {
    const SubsetSelection a_sel(a, *ai);
    const RootMultiset a1 = a_sel.selected();
    const RootMultiset a2 = a_sel.unselected();
    SubsetStream b_stream(n, q);
    while (auto bi = b_stream.next()) {
      const SubsetSelection b_sel(b, *bi);
      const RootMultiset b1 = b_sel.selected();
      const RootMultiset b2 = b_sel.unselected();
      const Rational coeff = rprod(a1, b1) * rprod(a2, b2) / (rprod(a1, a2) * rprod(b1, b2));
      if (coeff.is_zero()) continue;
      sum += coeff * poly_from_roots(a1.merged(b1));
    }
  }
  return sum;
}

UPoly syl_single(const RootMultiset& a, const RootMultiset& b, int d) {
  require_set(a, "A");
  const int m = size_of(a);
  if (d < 0 || d > m) throw Error(Errc::ValidationError, "need 0 <= d <= |A|");
  UPoly sum;
  SubsetStream stream(m, d);
  while (auto idx = stream.next()) {
    const SubsetSelection sel(a, *idx);
    const RootMultiset a1 = sel.selected();
    const RootMultiset a2 = sel.unselected();
    const Rational coeff = rprod(a2, b) / rprod(a1, a2);
    if (coeff.is_zero()) continue;
    sum += coeff * poly_from_roots(a1);
  }
  return sum;
}

std::vector<SylmTerm> sylm_terms(const RootMultiset& a, const RootMultiset& b, int d) {
  const int m = size_of(a);
  const int n = size_of(b);
  require_window(m, n, d);
  const int mbar = static_cast<int>(a.distinct_count());
  const int nbar = static_cast<int>(b.distinct_count());
  const int mp = m - mbar;
  const int np = n - nbar;
  const int r = std::max(0, mp + np - d);

  const auto [a_distinct, a_excess] = multiset_split(a);
  const RootMultiset b_distinct = multiset_split(b).first;

  // R1 lives in {m+n-2d, ..., r}; that window is empty unless d >= mbar + nbar.
  const IndexSet full = iota_set(1, r);
  const IndexSet r1_pool = iota_set(std::max(1, m + n - 2 * d), r);
  const int r2_low = std::max(0, mp - d);
  const int r3_low = std::max(0, np - d);
  const int b_offset = std::min(mp, d - np);
  const std::size_t big_k = static_cast<std::size_t>(m + n - d);
  const int shift = m + n - 2 * d - 1;

  std::vector<SylmTerm> terms;
  for (int r1 = 0; r1 <= static_cast<int>(r1_pool.size()); ++r1) {
    for (int r2 = r2_low; r2 <= std::min(m - d, r - r1); ++r2) {
      const int r3 = r - r1 - r2;
      if (r3 < r3_low || r3 > n - d) continue;
      const int a_size = r2 + d - mp;
      const int b_size = r3 + b_offset;
      if (a_size < 0 || a_size > mbar || b_size < 0 || b_size > nbar) continue;

      for_each_subset_of(r1_pool, r1, [&](const IndexSet& block1) {
        IndexSet rest;
        std::set_difference(full.begin(), full.end(), block1.begin(), block1.end(),
                            std::back_inserter(rest));
        for_each_subset_of(rest, r2, [&](const IndexSet& block2) {
          IndexSet block3;
          std::set_difference(rest.begin(), rest.end(), block2.begin(), block2.end(),
                              std::back_inserter(block3));
          const IndexPartition partition{r, {block1, block2, block3}};
          const int sign = sigma_sign(m, n, mbar, nbar, d, partition);
          IndexSet shifted;
          for (int i : block1) shifted.push_back(i - shift);

          SubsetStream a_stream(mbar, a_size);
          while (auto ai = a_stream.next()) {
            const SubsetSelection a_sel(a_distinct, *ai);
            const RootMultiset a_prime = a_sel.selected();
            const RootMultiset a_rest = a_sel.unselected();
            // With r = 0 the Schur factors are empty products; for d > m'+n' the
            // third one would not even be square.
            const Rational a_schur =
                r == 0 ? Rational(1) : schur_value({big_k, block2, a_rest.merged(b), false});
            SubsetStream b_stream(nbar, b_size);
            while (auto bi = b_stream.next()) {
              const SubsetSelection b_sel(b_distinct, *bi);
              const RootMultiset b_prime = b_sel.selected();
              const RootMultiset b_rest = b_sel.unselected();
              const RootMultiset ab_prime = a_prime.merged(b_prime);

              Rational coeff = rprod(a_excess, b_rest) * rprod(a_rest, b.minus(b_prime)) /
                               (rprod(a_prime, a_rest) * rprod(b_prime, b_rest));
              coeff *= a_schur;
              if (r > 0) coeff *= schur_value({big_k, block3, a.merged(b_rest), false});
              if (sign < 0) coeff = -coeff;
              const UPoly x_schur =
                  schur_poly_x({static_cast<std::size_t>(d + 1), shifted, ab_prime, true});
              UPoly value = coeff * (poly_from_roots(ab_prime) * x_schur);
              terms.push_back({partition, a_sel, b_sel, sign, std::move(value)});
            }
          }
        });
      });
    }
  }
  return terms;
}

UPoly sylm(const RootMultiset& a, const RootMultiset& b, int d) {
  UPoly sum;
  for (const auto& term : sylm_terms(a, b, d)) sum += term.value;
  return sum;
}

UPoly sylm_large_d(const RootMultiset& a, const RootMultiset& b, int d, bool force) {
  const int m = size_of(a);
  const int n = size_of(b);
  require_window(m, n, d);
  const int mbar = static_cast<int>(a.distinct_count());
  const int nbar = static_cast<int>(b.distinct_count());
  const int mp = m - mbar;
  const int np = n - nbar;
  if (!force && mp + np > d) {
    throw Error(Errc::DegreeWindow, "two-index multiset sum needs m'+n' <= d");
  }
  if (d - mp < 0 || d - mp > mbar || mp > nbar) {
    throw Error(Errc::ValidationError, "two-index multiset sum is undefined for these sizes");
  }

  std::vector<Rational> abar = a.values();
  std::vector<Rational> bbar = b.values();
  std::vector<Rational> a_excess;
  for (const auto& e : a.entries()) a_excess.insert(a_excess.end(), e.mult - 1, e.value);

  UPoly sum;
  for (const IndexSet& ai : enum_subsets(mbar, d - mp)) {
    std::vector<Rational> a1;
    std::vector<Rational> a2;
    for (int i = 1, next = 0; i <= mbar; ++i) {
      if (next < static_cast<int>(ai.size()) && ai[next] == i) {
        a1.push_back(abar[i - 1]);
        ++next;
      } else {
        a2.push_back(abar[i - 1]);
      }
    }
    for (const IndexSet& bi : enum_subsets(nbar, mp)) {
      std::vector<Rational> b1;
      std::vector<Rational> b2;
      for (int i = 1, next = 0; i <= nbar; ++i) {
        if (next < static_cast<int>(bi.size()) && bi[next] == i) {
          b1.push_back(bbar[i - 1]);
          ++next;
        } else {
          b2.push_back(bbar[i - 1]);
        }
      }
      // B \ B' as a list: every copy of every value, one copy fewer for values in B'.
      std::vector<Rational> b_minus;
      for (const auto& e : b.entries()) {
        const bool picked = std::find(b1.begin(), b1.end(), e.value) != b1.end();
        b_minus.insert(b_minus.end(), e.mult - (picked ? 1 : 0), e.value);
      }
      Rational num(1);
      for (const auto& u : a_excess) for (const auto& v : b2) num *= u - v;
      for (const auto& u : a2) for (const auto& v : b_minus) num *= u - v;
      if (num.is_zero()) continue;
      Rational den(1);
      for (const auto& u : a1) for (const auto& v : a2) den *= u - v;
      for (const auto& u : b1) for (const auto& v : b2) den *= u - v;
      UPoly roots(Rational(1));
      for (const auto& u : a1) roots *= UPoly::linear_factor(u);
      for (const auto& u : b1) roots *= UPoly::linear_factor(u);
      sum += (num / den) * roots;
    }
  }
  return (static_cast<long long>(mp) * (m - d)) % 2 == 0 ? sum : -sum;
}

Rational single_sum_eval(const RootMultiset& a, const RootMultiset& b, int d,
                         std::span<const Rational> xs) {
  require_set(a, "A");
  const int m = size_of(a);
  if (d < 0 || d > m) throw Error(Errc::ValidationError, "need 0 <= d <= |A|");
  Rational sum;
  SubsetStream stream(m, d);
  while (auto idx = stream.next()) {
    const SubsetSelection sel(a, *idx);
    const RootMultiset a1 = sel.selected();
    const RootMultiset a2 = sel.unselected();
    const Rational num = rprod(a2, b);
    if (num.is_zero()) continue;
    sum += num * rprod_points(xs, a1) / rprod(a1, a2);
  }
  return sum;
}

Rational exchange_rhs_eval(const RootMultiset& a, const RootMultiset& b, int d,
                           std::span<const Rational> xs) {
  require_set(b, "B");
  const int n = size_of(b);
  if (d < 0) throw Error(Errc::ValidationError, "need d >= 0");
  if (n < d) throw Error(Errc::TooFewElements, "|B| < d");
  Rational sum;
  SubsetStream stream(n, d);
  while (auto idx = stream.next()) {
    const SubsetSelection sel(b, *idx);
    const RootMultiset b1 = sel.selected();
    const RootMultiset b2 = sel.unselected();
    const Rational num = rprod(a, b2);
    if (num.is_zero()) continue;
    sum += num * rprod_points(xs, b1) / rprod(b1, b2);
  }
  const long long exponent = static_cast<long long>(d) * (size_of(a) - d);
  return exponent % 2 == 0 ? sum : -sum;
}

Rational apery_jouanolou_rhs(const RootMultiset& a, const RootMultiset& b, int d,
                             const RootMultiset& e, std::span<const Rational> xs) {
  require_set(e, "E");
  const int m = size_of(a);
  const int n = size_of(b);
  const int size = size_of(e);
  if (d < 0 || d > m) throw Error(Errc::ValidationError, "need 0 <= d <= |A|");
  const int bound = std::max({static_cast<int>(xs.size()) + d, m + n - d, m});
  if (size < bound) {
    throw Error(Errc::CardinalityTooSmall,
                "|E|=" + std::to_string(size) + " below " + std::to_string(bound));
  }
  Rational sum;
  SubsetStream e1_stream(size, d);
  while (auto i1 = e1_stream.next()) {
    const SubsetSelection s1(e, *i1);
    const RootMultiset e1 = s1.selected();
    const RootMultiset rest = s1.unselected();
    const Rational x_part = rprod_points(xs, e1);
    if (x_part.is_zero()) continue;
    SubsetStream e2_stream(size - d, m - d);
    while (auto i2 = e2_stream.next()) {
      const SubsetSelection s2(rest, *i2);
      const RootMultiset e2 = s2.selected();
      const RootMultiset e3 = s2.unselected();
      const Rational num = rprod(a, e3) * rprod(e2, b);
      if (num.is_zero()) continue;
      sum += num * x_part / (rprod(e1, e2) * rprod(e1, e3) * rprod(e2, e3));
    }
  }
  return sum;
}

Rational sym_interp_eval(const RootMultiset& e, int d, const SymmetricEvaluator& h,
                         std::span<const Rational> xs) {
  require_set(e, "E");
  const int size = size_of(e);
  if (d < 0 || d >= size) throw Error(Errc::ValidationError, "need 0 <= d < |E|");
  if (static_cast<int>(xs.size()) != size - d) {
    throw Error(Errc::ArityMismatch, std::to_string(xs.size()) + " variables given, " +
                                         std::to_string(size - d) + " expected");
  }
  Rational sum;
  SubsetStream stream(size, d);
  while (auto idx = stream.next()) {
    const SubsetSelection sel(e, *idx);
    const RootMultiset chosen = sel.selected();
    const RootMultiset rest = sel.unselected();
    const Rational x_part = rprod_points(xs, chosen);
    if (x_part.is_zero()) continue;
    const std::vector<Rational> rest_values = rest.values();
    sum += h(rest_values) * x_part / rprod(rest, chosen);
  }
  return sum;
}

}  // namespace sylsum
