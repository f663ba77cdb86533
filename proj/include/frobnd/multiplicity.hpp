#ifndef FROBND_MULTIPLICITY_HPP
#define FROBND_MULTIPLICITY_HPP

#include <vector>

#include "frobnd/semigroup.hpp"

namespace frobnd {

/// Memoized path counts m(z) = sum_j m(z - X_j), m(0) = 1, over the full
/// multiset X. Values inside the box persist; values outside it are
/// recomputed per query.
class MultiplicityTable {
 public:
  explicit MultiplicityTable(const VectorSet& x);
  MultiplicityTable(const VectorSet& x, const IntVector& lo, const IntVector& hi);

  /// Table whose box covers every predecessor of points z with
  /// <h_i, z> <= upper_i for all cone half-space normals h_i.
  static MultiplicityTable covering(const VectorSet& x, const std::vector<Rational>& upper);

  BigInt multiplicity(const IntVector& z);
  bool in_semigroup(const IntVector& z) { return multiplicity(z) != 0; }

  /// Evaluates every box point in increasing <alpha, z> order.
  void fill();

  const VectorSet& vectors() const { return x_; }
  const IntVector& box_lo() const { return values_.lo(); }
  const IntVector& box_hi() const { return values_.hi(); }

 private:
  const BigInt* lookup(const IntVector& z, const std::unordered_map<IntVector, BigInt, IntVectorHash>& scratch) const;

  VectorSet x_;
  std::vector<std::pair<IntVector, std::int64_t>> groups_;  // distinct generator, count
  BoxArray<BigInt> values_;
  BoxArray<std::uint8_t> known_;
};

/// All u in N^m with sum u_j X_j = z, in lexicographic order.
std::vector<IntVector> representations(const VectorSet& x, const IntVector& z);

/// |u|! / (u_1! ... u_m!)
BigInt multinomial(const IntVector& u);

/// sum over u in A(z) of |u|!/u!; the closed formula for m(z).
BigInt multiplicity_by_formula(const VectorSet& x, const IntVector& z);

BigInt multiplicity(const VectorSet& x, MultiplicityTable& table, const IntVector& z);

struct NearestPoint {
  IntVector z;
  double distance = 0.0;
  BigInt m;
};

/// Nearest J-point to x among lattice points within `radius` (plus 1e-9).
/// Ties within 1e-9 in distance go to the smaller multiplicity, then the
/// lexicographically smaller point. `face` restricts candidates to points
/// annihilated by the given normals. Throws InvalidArgument when no J-point
/// lies inside the ball.
NearestPoint nearest_point(MultiplicityTable& table, const std::vector<double>& x, double radius,
                           const std::vector<IntVector>& face = {});

/// m(x) for real x in C_X: multiplicity of the nearest J-point, the minimum
/// over equidistant ones. x outside C_X is rejected with InvalidArgument.
BigInt multiplicity_at(MultiplicityTable& table, const SaturationContext& ctx, const std::vector<double>& x);

struct HausdorffDistance {
  std::int64_t squared = 0;
  double value = 0.0;
};

/// Hausdorff distance between A(z) and A(z') in the Euclidean norm on N^m.
/// Throws EmptyRepresentationSet when either point is outside J.
HausdorffDistance hausdorff_A(const VectorSet& x, const IntVector& z, const IntVector& z2);

/// Natural log of a positive integer, accurate for values beyond double range.
double log_bigint(const BigInt& v);

}  // namespace frobnd

#endif  // FROBND_MULTIPLICITY_HPP
