#ifndef FROBND_TYPES_HPP
#define FROBND_TYPES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobnd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of the ambient lattice Z^s.
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

enum class ErrorKind {
  InvalidArgument,
  ZeroVector,
  NotFullRank,
  NoHalfSpace,
  NotInSemigroup,
  RegionGrowthExceeded,
  EmptyRepresentationSet,
  BetaNotInterior,
  GaugeUnavailable,
  NoConvergence,
  HorizonTooSmall,
  NotCoplanar,
  IterationTooLarge,
  InconclusiveSampling,
  SingularTransform,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

std::int64_t dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, std::int64_t k);
bool is_zero(const IntVector& a);
std::int64_t norm_sq(const IntVector& a);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(const IntVector& a);

Rational dot(const RationalVector& a, const IntVector& b);

std::string format(const IntVector& v);
std::string format(const Rational& q);

/// Calls f(z) for every integer point z of the box [lo, hi], last coordinate
/// fastest.
template <class F>
void for_each_point(const IntVector& lo, const IntVector& hi, F&& f) {
  const std::size_t s = lo.size();
  for (std::size_t i = 0; i < s; ++i)
    if (hi[i] < lo[i]) return;
  IntVector z = lo;
  for (;;) {
    f(static_cast<const IntVector&>(z));
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (z[i] < hi[i]) {
        ++z[i];
        break;
      }
      z[i] = lo[i];
      if (i == 0) return;
    }
    if (s == 0) return;
  }
}

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace frobnd

#endif  // FROBND_TYPES_HPP
