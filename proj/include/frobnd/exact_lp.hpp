#ifndef FROBND_EXACT_LP_HPP
#define FROBND_EXACT_LP_HPP

#include "frobnd/rational_linalg.hpp"

namespace frobnd {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;
  Rational objective;
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase tableau simplex with Bland's rule, so it terminates on degenerate
/// problems. Intended for the handful of variables that occur here.
LpResult maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// Feasibility only: some x >= 0 with A x = b.
std::optional<RationalVector> feasible_point(const RationalMatrix& a, const RationalVector& b);

}  // namespace frobnd

#endif  // FROBND_EXACT_LP_HPP
