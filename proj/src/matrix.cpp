#include "sylsum/matrix.hpp"

#include <utility>

namespace sylsum {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) {
    throw Error(Errc::NotSquare,
                std::to_string(rows) + "x" + std::to_string(cols) + " matrix has no determinant");
  }
}

// Entry of a derivative column: d^c/dy^c (y^e) at y = v, i.e.
// e (e-1) ... (e-c+1) v^(e-c), zero when c > e.
Rational derivative_entry(const Rational& v, std::size_t e, std::size_t c) {
  if (c > e) return Rational(0);
  Rational factor(1);
  for (std::size_t i = 0; i < c; ++i) factor *= Rational(static_cast<std::int64_t>(e - i));
  return factor * v.pow(static_cast<unsigned>(e - c));
}

std::size_t total_columns(std::span<const RootEntry> blocks) {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.mult;
  return r;
}

void fill_confluent(MatrixQ& out, std::size_t k, std::span<const RootEntry> blocks) {
  std::size_t col = 1;
  for (const auto& block : blocks) {
    for (std::size_t c = 0; c < block.mult; ++c, ++col) {
      for (std::size_t t = 1; t <= k; ++t) out(t, col) = derivative_entry(block.value, k - t, c);
    }
  }
}

}  // namespace

Rational det_q(const MatrixQ& input) {
  require_square(input.rows(), input.cols());
  const std::size_t n = input.rows();
  if (n == 0) return Rational(1);
  MatrixQ m = input;
  Rational previous(1);
  bool negate = false;
  for (std::size_t k = 1; k <= n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot <= n && m(pivot, k).is_zero()) ++pivot;
      if (pivot > n) return Rational(0);
      for (std::size_t j = 1; j <= n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Rational(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n, n) : m(n, n);
}

UPoly det_p(const MatrixP& m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  std::size_t poly_col = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (m(i, j).is_constant()) continue;
      if (poly_col != 0 && poly_col != j) {
        throw Error(Errc::MultiplePolyColumns,
                    "columns " + std::to_string(poly_col) + " and " + std::to_string(j) +
                        " both hold nonconstant entries");
      }
      poly_col = j;
    }
  }

  if (poly_col == 0) {
    MatrixQ constants(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) constants(i, j) = m(i, j).coeff(0);
    }
    return UPoly(det_q(constants));
  }

  UPoly result;
  MatrixQ minor(n - 1, n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    if (m(i, poly_col).is_zero()) continue;
    for (std::size_t r = 1, mr = 1; r <= n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1, mc = 1; c <= n; ++c) {
        if (c == poly_col) continue;
        minor(mr, mc++) = m(r, c).coeff(0);
      }
      ++mr;
    }
    Rational cofactor = det_q(minor);
    if ((i + poly_col) % 2 == 1) cofactor = -cofactor;
    result += m(i, poly_col) * cofactor;
  }
  return result;
}

MatrixQ vandermonde_confluent(std::size_t k, std::span<const RootEntry> blocks) {
  const std::size_t r = total_columns(blocks);
  if (k < r) {
    throw Error(Errc::TooManyColumns,
                std::to_string(r) + " columns do not fit in " + std::to_string(k) + " rows");
  }
  MatrixQ out(k, r);
  fill_confluent(out, k, blocks);
  return out;
}

MatrixQ vandermonde_confluent(std::size_t k, const RootMultiset& x) {
  return vandermonde_confluent(k, std::span<const RootEntry>(x.entries()));
}

MatrixP vandermonde_confluent_with_x(std::size_t k, std::span<const RootEntry> blocks) {
  const std::size_t r = total_columns(blocks);
  if (k < r + 1) {
    throw Error(Errc::TooManyColumns,
                std::to_string(r + 1) + " columns do not fit in " + std::to_string(k) + " rows");
  }
  MatrixQ constant(k, r);
  fill_confluent(constant, k, blocks);
  MatrixP out(k, r + 1);
  for (std::size_t t = 1; t <= k; ++t) {
    for (std::size_t c = 1; c <= r; ++c) out(t, c) = UPoly(constant(t, c));
    out(t, r + 1) = UPoly::monomial(k - t);
  }
  return out;
}

MatrixP vandermonde_confluent_with_x(std::size_t k, const RootMultiset& x) {
  return vandermonde_confluent_with_x(k, std::span<const RootEntry>(x.entries()));
}

}  // namespace sylsum
