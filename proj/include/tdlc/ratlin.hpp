#pragma once

// Exact sparse linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tdlc {

/// Always canonical: gcd(|num|, den) = 1 and den > 0. gmpxx keeps results of
/// arithmetic canonical; make_rational canonicalizes explicit fractions.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Immutable sparse matrix. Rows are stored as column-sorted (col, value)
/// lists holding only nonzero entries.
class RationalMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using SparseRow = std::vector<Entry>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed; zero sums are dropped.
  static RationalMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> triplets);
  static RationalMatrix from_dense(const std::vector<RationalVector>& dense,
                                   std::size_t cols_if_empty = 0);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const Entry> row(std::size_t r) const { return data_.at(r); }
  Rational at(std::size_t r, std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector apply(std::span<const Rational> v) const;
  std::vector<RationalVector> to_dense() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Reduced row echelon form: pivot rows normalized to leading 1 and cleared
/// in every other pivot column.
struct Echelon {
  std::vector<std::size_t> pivot_cols;
  std::vector<RationalMatrix::SparseRow> rows;
  std::size_t cols = 0;
};

/// Gaussian elimination with a Markowitz-style pivot choice (sparsest row,
/// then sparsest column inside it). The input is never modified.
Echelon row_reduce(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel; size = cols - rank, each v satisfies m v = 0.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// boundaries[q] is the matrix of d_q : C_q -> C_{q-1}; boundaries[0] is the
/// map C_0 -> 0 and so has zero rows. Returns dim H_q for q = 0..n-1.
/// Throws CompositionNonZero when d_q d_{q+1} != 0 or shapes disagree.
std::vector<std::size_t> homology_dims(std::span<const RationalMatrix> boundaries);

/// coboundaries[q] is the matrix of d^q : C^q -> C^{q+1}. Returns dim H^q for
/// q = 0..n-1, the missing d^{-1} being zero.
std::vector<std::size_t> cohomology_dims(std::span<const RationalMatrix> coboundaries);

}  // namespace tdlc
