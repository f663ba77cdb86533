#include "frobnd/rational_linalg.hpp"

#include <utility>

namespace frobnd {

RationalMatrix RationalMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RowEchelon row_reduce(RationalMatrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& a) { return row_reduce(a).pivot_cols.size(); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  return rank(RationalMatrix::from_rows(rows, cols));
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    if (e.pivot_cols[i] == a.cols()) return std::nullopt;
    x[e.pivot_cols[i]] = e.reduced(i, a.cols());
  }
  return x;
}

std::vector<RationalVector> null_space(const RationalMatrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace frobnd
