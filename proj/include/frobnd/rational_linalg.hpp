#ifndef FROBND_RATIONAL_LINALG_HPP
#define FROBND_RATIONAL_LINALG_HPP

#include <optional>
#include <vector>

#include "frobnd/types.hpp"

namespace frobnd {

/// Dense row-major matrix over Q. Small sizes only (s, m at desk scale).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
};

RowEchelon row_reduce(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

/// Any solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Basis of the right null space {x : A x = 0}.
std::vector<RationalVector> null_space(const RationalMatrix& a);

Rational determinant(RationalMatrix a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace frobnd

#endif  // FROBND_RATIONAL_LINALG_HPP
