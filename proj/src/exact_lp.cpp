#include "frobnd/exact_lp.hpp"

namespace frobnd {
namespace {

class Tableau {
 public:
  // Row `rows_` is the objective row; column `cols_` is the right-hand side.
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows + 1, cols + 1), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
  Rational& rhs(std::size_t r) { return t_(r, cols_); }
  Rational& cost(std::size_t c) { return t_(rows_, c); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / t_(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) t_(pr, c) *= inv;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr || t_(r, pc) == 0) continue;
      const Rational f = t_(r, pc);
      for (std::size_t c = 0; c <= cols_; ++c)
        if (t_(pr, c) != 0) t_(r, c) -= f * t_(pr, c);
    }
    basis_[pr] = pc;
  }

  // Bland's rule; columns >= allowed_cols never enter.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t c = 0; c < allowed_cols; ++c) {
        if (t_(rows_, c) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == allowed_cols) return true;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_(r, enter) <= 0) continue;
        const Rational ratio = t_(r, cols_) / t_(r, enter);
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Tableau tab(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = flip ? -a(r, j) : a(r, j);
    tab.at(r, n + r) = 1;
    tab.rhs(r) = flip ? -b[r] : b[r];
    tab.basis(r) = n + r;
  }

  // Phase I: maximize -(sum of artificials).
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t r = 0; r < m; ++r) s += tab.at(r, j);
    tab.cost(j) = -s;
  }
  {
    Rational s = 0;
    for (std::size_t r = 0; r < m; ++r) s += tab.rhs(r);
    tab.cost(n + m) = -s;
  }
  tab.optimize(n + m);
  LpResult result;
  if (tab.cost(n + m) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.at(r, j) != 0) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase II.
  for (std::size_t j = 0; j <= n + m; ++j) tab.cost(j) = 0;
  for (std::size_t j = 0; j < n; ++j) tab.cost(j) = -c[j];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bj = tab.basis(r);
    if (bj >= n || c[bj] == 0) continue;
    const Rational cb = c[bj];
    for (std::size_t j = 0; j <= n + m; ++j)
      if (tab.at(r, j) != 0) tab.cost(j) += cb * tab.at(r, j);
  }
  if (!tab.optimize(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis(r) < n) result.x[tab.basis(r)] = tab.rhs(r);
  result.objective = tab.cost(n + m);
  return result;
}

std::optional<RationalVector> feasible_point(const RationalMatrix& a, const RationalVector& b) {
  LpResult r = maximize(a, b, RationalVector(a.cols(), Rational(0)));
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return std::move(r.x);
}

}  // namespace frobnd
