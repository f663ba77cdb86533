#include "frobnd/types.hpp"

#include <numeric>
#include <sstream>

namespace frobnd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::NoHalfSpace: return "NoHalfSpace";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::RegionGrowthExceeded: return "RegionGrowthExceeded";
    case ErrorKind::EmptyRepresentationSet: return "EmptyRepresentationSet";
    case ErrorKind::BetaNotInterior: return "BetaNotInterior";
    case ErrorKind::GaugeUnavailable: return "GaugeUnavailable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::NotCoplanar: return "NotCoplanar";
    case ErrorKind::IterationTooLarge: return "IterationTooLarge";
    case ErrorKind::InconclusiveSampling: return "InconclusiveSampling";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const IntVector& a, std::int64_t k) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool is_zero(const IntVector& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t norm_sq(const IntVector& a) { return dot(a, a); }

IntVector primitive(const IntVector& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x);
  if (g == 0) return a;
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

}  // namespace frobnd
