#ifndef FROBND_SEMIGROUP_HPP
#define FROBND_SEMIGROUP_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frobnd/vecset.hpp"

namespace frobnd {

/// Dense array indexed by the integer points of a box [lo, hi].
template <class T>
class BoxArray {
 public:
  BoxArray() = default;
  BoxArray(IntVector lo, IntVector hi, T init = T{}) : lo_(std::move(lo)), hi_(std::move(hi)) {
    std::size_t n = lo_.empty() ? 0 : 1;
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      if (hi_[i] < lo_[i]) {
        n = 0;
        break;
      }
      const auto extent = static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
      if (n > kMaxCells / extent) throw Error(ErrorKind::InvalidArgument, "memo box too large");
      n *= extent;
    }
    data_.assign(n, init);
  }

  bool inside(const IntVector& z) const {
    if (data_.empty()) return false;
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (z[i] < lo_[i] || z[i] > hi_[i]) return false;
    return true;
  }

  T& operator[](const IntVector& z) { return data_[index(z)]; }
  const T& operator[](const IntVector& z) const { return data_[index(z)]; }

  const IntVector& lo() const { return lo_; }
  const IntVector& hi() const { return hi_; }
  std::size_t cells() const { return data_.size(); }

  static constexpr std::size_t kMaxCells = std::size_t{1} << 27;

 private:
  std::size_t index(const IntVector& z) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < lo_.size(); ++i)
      idx = idx * static_cast<std::size_t>(hi_[i] - lo_[i] + 1) + static_cast<std::size_t>(z[i] - lo_[i]);
    return idx;
  }

  IntVector lo_, hi_;
  std::vector<T> data_;
};

/// Memoized J-membership. Results inside the box are cached for the lifetime
/// of the oracle; results outside it are cached for one query only.
class MembershipOracle {
 public:
  explicit MembershipOracle(const VectorSet& x);
  MembershipOracle(const VectorSet& x, const IntVector& lo, const IntVector& hi);

  bool contains(const IntVector& z);
  const VectorSet& vectors() const { return x_; }

 private:
  enum : std::uint8_t { kUnknown = 0, kIn = 1, kOut = 2 };

  std::uint8_t lookup(const IntVector& z,
                      const std::unordered_map<IntVector, std::uint8_t, IntVectorHash>& scratch) const;

  VectorSet x_;
  BoxArray<std::uint8_t> memo_;
};

/// One-off membership test z in J.
bool in_semigroup(const VectorSet& x, const IntVector& z);

/// Data of the constructive saturated apex.
struct SaturationContext {
  std::vector<IntVector> omega_star;  // lattice points of the half-open zonotope, sorted
  std::int64_t M = 0;
  IntVector g0;
  std::int64_t r0_squared = 0;  // squared diameter of the zonotope
  double r0 = 0.0;
};

/// Lattice points of {sum c_j X_j : 0 <= c_j < 1} over the distinct generators.
std::vector<IntVector> omega_star(const VectorSet& x);

/// Squared diameter of the zonotope spanned by the distinct generators.
std::int64_t zonotope_diameter_squared(const VectorSet& x);

/// Smallest max-norm of an integer vector a with sum a_j X_j = z (distinct
/// generators). z must lie in the lattice.
std::int64_t min_integer_representation(const VectorSet& x, const IntVector& z);

SaturationContext saturation_context(const VectorSet& x);

/// Whether every lattice point of g + C_X lies in J. Throws NotInSemigroup
/// when g itself is not in J.
bool is_saturated(const VectorSet& x, const SaturationContext& ctx, const IntVector& g);
bool is_saturated(MembershipOracle& oracle, const SaturationContext& ctx, const IntVector& g);

struct FrobeniusSet {
  std::vector<IntVector> apexes;  // lexicographic
  int rounds = 0;                 // region growth rounds used
  double region_width = 0.0;      // final slab width w
};

struct FrobeniusOptions {
  int max_rounds = 8;
};

/// Apexes of the maximal saturated cones. The search region is grown until no
/// saturated, undominated lattice point remains in its outer shell; throws
/// RegionGrowthExceeded once max_rounds is used up.
FrobeniusSet frobenius_set(const VectorSet& x, const SaturationContext& ctx, const FrobeniusOptions& options = {});

}  // namespace frobnd

#endif  // FROBND_SEMIGROUP_HPP
