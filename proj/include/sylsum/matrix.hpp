#ifndef SYLSUM_MATRIX_HPP
#define SYLSUM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sylsum/combinatorics.hpp"
#include "sylsum/errors.hpp"
#include "sylsum/rational.hpp"
#include "sylsum/rootset.hpp"
#include "sylsum/upoly.hpp"

namespace sylsum {

/// Dense row-major matrix. Public indexing is 1-based to match the row
/// numbering used by the Vandermonde and subresultant constructions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(Errc::ValidationError, "matrix data does not match its shape");
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixP = Matrix<UPoly>;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws Error(NotSquare). The 0x0 determinant is 1.
Rational det_q(const MatrixQ& m);

/// Determinant of a polynomial matrix in which at most one column holds
/// nonconstant entries, by cofactor expansion along that column.
/// Throws Error(NotSquare) or Error(MultiplePolyColumns).
UPoly det_p(const MatrixP& m);

/// k x r confluent Vandermonde matrix of X (r = |X| counted with
/// multiplicity). Row t carries exponent k - t; a value of multiplicity j
/// contributes j columns holding its successive derivatives. Blocks follow
/// the order of `blocks`. Throws Error(TooManyColumns) if k < r.
MatrixQ vandermonde_confluent(std::size_t k, std::span<const RootEntry> blocks);
MatrixQ vandermonde_confluent(std::size_t k, const RootMultiset& x);

/// Same as vandermonde_confluent, followed by one column [x^(k-1), ..., x, 1]
/// for a symbolic simple point x. Throws Error(TooManyColumns) if k < |X| + 1.
MatrixP vandermonde_confluent_with_x(std::size_t k, std::span<const RootEntry> blocks);
MatrixP vandermonde_confluent_with_x(std::size_t k, const RootMultiset& x);

/// Square submatrix left after deleting the rows listed in `removed`
/// (1-based, sorted). Throws Error(IndexOutOfRange) or
/// Error(NotSquareAfterRemoval).
template <class T>
Matrix<T> remove_rows(const Matrix<T>& m, const IndexSet& removed) {
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (removed[i] < 1 || static_cast<std::size_t>(removed[i]) > m.rows() ||
        (i > 0 && removed[i] <= removed[i - 1])) {
      throw Error(Errc::IndexOutOfRange, "row index set must be sorted within 1.." +
                                             std::to_string(m.rows()));
    }
  }
  if (m.rows() - removed.size() != m.cols()) {
    throw Error(Errc::NotSquareAfterRemoval,
                std::to_string(m.rows()) + " rows minus " + std::to_string(removed.size()) +
                    " removed does not match " + std::to_string(m.cols()) + " columns");
  }
  Matrix<T> out(m.cols(), m.cols());
  std::size_t target = 1;
  std::size_t next = 0;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (next < removed.size() && static_cast<std::size_t>(removed[next]) == i) {
      ++next;
      continue;
    }
    for (std::size_t j = 1; j <= m.cols(); ++j) out(target, j) = m(i, j);
    ++target;
  }
  return out;
}

}  // namespace sylsum

#endif
