#include "tdlc/ratlin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tdlc/error.hpp"

namespace tdlc {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                             std::vector<Triplet> triplets) {
  RationalMatrix m(rows, cols);
  std::vector<std::map<std::size_t, Rational>> acc(rows);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw Error(ErrorCode::InvalidInput, "triplet index out of range");
    t.value.canonicalize();
    acc[t.row][t.col] += t.value;
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& [c, v] : acc[r])
      if (v != 0) m.data_[r].emplace_back(c, v);
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<RationalVector>& dense,
                                          std::size_t cols_if_empty) {
  const std::size_t cols = dense.empty() ? cols_if_empty : dense.front().size();
  RationalMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw Error(ErrorCode::InvalidInput, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational v = dense[r][c];
      v.canonicalize();
      if (v != 0) m.data_[r].emplace_back(c, std::move(v));
    }
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

std::size_t RationalMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::InvalidInput, "matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidInput, "shape mismatch in product");
  RationalMatrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : rhs.data_[k]) acc[c] += a * b;
    for (auto& [c, v] : acc)
      if (v != 0) p.data_[r].emplace_back(c, v);
  }
  return p;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidInput, "shape mismatch in apply");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, a] : data_[r]) out[r] += a * v[c];
  return out;
}

std::vector<RationalVector> RationalMatrix::to_dense() const {
  std::vector<RationalVector> d(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) d[r][c] = v;
  return d;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

using WorkRow = std::map<std::size_t, Rational>;

}  // namespace

Echelon row_reduce(const RationalMatrix& m) {
  const std::size_t nrows = m.rows();
  std::vector<WorkRow> work(nrows);
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  std::set<std::size_t> active;
  for (std::size_t r = 0; r < nrows; ++r) {
    for (const auto& [c, v] : m.row(r)) {
      work[r].emplace(c, v);
      col_rows[c].insert(r);
    }
    if (!work[r].empty()) active.insert(r);
  }

  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  while (!active.empty()) {
    std::size_t prow = *std::min_element(active.begin(), active.end(),
                                         [&](std::size_t a, std::size_t b) {
                                           return work[a].size() < work[b].size();
                                         });
    std::size_t pcol = work[prow].begin()->first;
    for (const auto& [c, v] : work[prow])
      if (col_rows[c].size() < col_rows[pcol].size()) pcol = c;

    active.erase(prow);
    for (const auto& [c, v] : work[prow]) col_rows[c].erase(prow);

    const Rational pval = work[prow].at(pcol);
    const std::vector<std::size_t> targets(col_rows[pcol].begin(), col_rows[pcol].end());
    for (std::size_t r : targets) {
      const Rational factor = work[r].at(pcol) / pval;
      for (const auto& [c, v] : work[prow]) {
        auto [it, inserted] = work[r].try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) {
          work[r].erase(it);
          col_rows[c].erase(r);
        } else if (inserted) {
          col_rows[c].insert(r);
        }
      }
      if (work[r].empty()) active.erase(r);
    }
    pivot_rows.push_back(prow);
    pivot_cols.push_back(pcol);
  }

  // Pivot row i has no entries in the columns of earlier pivots; clear the
  // later pivot columns by back substitution.
  const std::size_t k = pivot_rows.size();
  for (std::size_t i = k; i-- > 0;) {
    WorkRow& row = work[pivot_rows[i]];
    const Rational inv = 1 / row.at(pivot_cols[i]);
    for (auto& [c, v] : row) v *= inv;
    for (std::size_t j = 0; j < i; ++j) {
      WorkRow& other = work[pivot_rows[j]];
      auto hit = other.find(pivot_cols[i]);
      if (hit == other.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [c, v] : row) {
        auto& slot = other[c];
        slot -= factor * v;
        if (slot == 0) other.erase(c);
      }
    }
  }

  Echelon e;
  e.cols = m.cols();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_cols[a] < pivot_cols[b]; });
  for (std::size_t i : order) {
    e.pivot_cols.push_back(pivot_cols[i]);
    const WorkRow& row = work[pivot_rows[i]];
    e.rows.emplace_back(row.begin(), row.end());
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const auto& row = e.rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& en, std::size_t col) { return en.first < col; });
      if (it != row.end() && it->first == f) v[e.pivot_cols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> homology_dims(std::span<const RationalMatrix> boundaries) {
  const std::size_t n = boundaries.size();
  for (std::size_t q = 0; q + 1 < n; ++q) {
    if (boundaries[q + 1].rows() != boundaries[q].cols())
      throw Error(ErrorCode::CompositionNonZero,
                  "d_" + std::to_string(q + 1) + " does not land in C_" + std::to_string(q));
    if (!(boundaries[q] * boundaries[q + 1]).is_zero())
      throw Error(ErrorCode::CompositionNonZero,
                  "d_" + std::to_string(q) + " o d_" + std::to_string(q + 1) + " != 0");
  }
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t q = 0; q < n; ++q) ranks[q] = rank(boundaries[q]);
  std::vector<std::size_t> dims(n);
  for (std::size_t q = 0; q < n; ++q)
    dims[q] = boundaries[q].cols() - ranks[q] - ranks[q + 1];
  return dims;
}

std::vector<std::size_t> cohomology_dims(std::span<const RationalMatrix> coboundaries) {
  const std::size_t n = coboundaries.size();
  for (std::size_t q = 0; q + 1 < n; ++q) {
    if (coboundaries[q + 1].cols() != coboundaries[q].rows())
      throw Error(ErrorCode::CompositionNonZero,
                  "d^" + std::to_string(q + 1) + " does not start at C^" + std::to_string(q + 1));
    if (!(coboundaries[q + 1] * coboundaries[q]).is_zero())
      throw Error(ErrorCode::CompositionNonZero,
                  "d^" + std::to_string(q + 1) + " o d^" + std::to_string(q) + " != 0");
  }
  std::vector<std::size_t> ranks(n, 0);
  for (std::size_t q = 0; q < n; ++q) ranks[q] = rank(coboundaries[q]);
  std::vector<std::size_t> dims(n);
  for (std::size_t q = 0; q < n; ++q)
    dims[q] = coboundaries[q].cols() - ranks[q] - (q == 0 ? 0 : ranks[q - 1]);
  return dims;
}

}  // namespace tdlc
