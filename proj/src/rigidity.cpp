#include "frobnd/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace frobnd {

std::uint64_t IteratedSet::total() const {
  std::uint64_t n = 0;
  for (const auto& [v, c] : multiset) n += c;
  return n;
}

std::vector<IntVector> IteratedSet::expanded() const {
  std::vector<IntVector> out;
  for (const auto& [v, c] : multiset) out.insert(out.end(), c, v);
  return out;
}

IteratedSet iterate(const VectorSet& x, std::size_t p, std::uint64_t cap) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "iteration order must be positive");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (total > cap / x.size()) throw Error(ErrorKind::IterationTooLarge, "m^p exceeds the iteration cap");
    total *= x.size();
  }
  std::map<IntVector, std::uint64_t> base;
  for (const auto& v : x.vectors()) ++base[v];
  std::map<IntVector, std::uint64_t> cur{{IntVector(x.dim(), 0), 1}};
  for (std::size_t i = 0; i < p; ++i) {
    std::map<IntVector, std::uint64_t> next;
    for (const auto& [v, c] : cur)
      for (const auto& [g, k] : base) next[add(v, g)] += c * k;
    cur = std::move(next);
  }
  IteratedSet out;
  out.p = p;
  out.multiset.assign(cur.begin(), cur.end());
  return out;
}

bool permutation_equal(std::vector<IntVector> a, std::vector<IntVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool permutation_equal(const IteratedSet& a, const IteratedSet& b) { return a.multiset == b.multiset; }

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Pairing: return "pairing";
    case WitnessKind::ConeMismatch: return "cone-mismatch";
    case WitnessKind::RefutingDirection: return "refuting-direction";
    case WitnessKind::MultisetMismatch: return "multiset-mismatch";
  }
  return "unknown";
}

namespace {

struct Gap {
  std::vector<double> theta;
  double gx, gy;
};

std::optional<Gap> find_gap(const VectorSet& x, const VectorSet& y, int budget, double tolerance) {
  for (const auto& theta : interior_directions(x, budget)) {
    if (!y.cone().contains_interior(theta, 1e-12)) continue;
    const double gx = gamma_closed(x, theta);
    const double gy = gamma_closed(y, theta);
    if (std::abs(gx - gy) > tolerance) return Gap{theta, gx, gy};
  }
  return std::nullopt;
}

}  // namespace

RigidityVerdict same_growth(const VectorSet& x, const VectorSet& y, const RigidityOptions& options) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::InvalidArgument, "sets live in different dimensions");
  if (!x.coplanarity().coplanar()) throw Error(ErrorKind::NotCoplanar, "first set is not coplanar");
  if (!y.coplanarity().coplanar()) throw Error(ErrorKind::NotCoplanar, "second set is not coplanar");

  RigidityVerdict v;
  const RationalVector& ex = *x.coplanarity().eta;
  const RationalVector& ey = *y.coplanarity().eta;
  v.notes.eta_x = ex;
  v.notes.eta_y = ey;
  v.notes.cones_equal = x.cone().extreme_rays == y.cone().extreme_rays;
  if (!v.notes.cones_equal) {
    v.witness = WitnessKind::ConeMismatch;
    v.notes.messages.push_back("extreme rays differ");
    return v;
  }

  std::optional<Rational> c;
  for (std::size_t i = 0; i < ey.size() && !c; ++i)
    if (ey[i] != 0) c = ex[i] / ey[i];
  bool parallel = c && *c > 0;
  for (std::size_t i = 0; parallel && i < ex.size(); ++i) parallel = ex[i] == *c * ey[i];
  v.notes.eta_parallel = parallel;
  if (!parallel) {
    v.notes.messages.push_back("eta and eta' are not parallel");
    const auto gap = find_gap(x, y, options.sample_budget, options.tolerance);
    if (!gap)
      throw Error(ErrorKind::InconclusiveSampling, "no refuting direction among " +
                                                       std::to_string(options.sample_budget) + " samples");
    v.witness = WitnessKind::RefutingDirection;
    v.theta = gap->theta;
    v.gamma_x = gap->gx;
    v.gamma_y = gap->gy;
    return v;
  }

  v.c = *c;
  v.q = static_cast<std::uint64_t>(numerator(*c));
  v.p = static_cast<std::uint64_t>(denominator(*c));
  v.x_iterate = iterate(x, v.q, options.iteration_cap);
  v.y_iterate = iterate(y, v.p, options.iteration_cap);
  v.equivalent = permutation_equal(*v.x_iterate, *v.y_iterate);
  if (v.equivalent) {
    v.witness = WitnessKind::Pairing;
  } else {
    v.notes.messages.push_back("iterated multisets differ");
    if (const auto gap = find_gap(x, y, options.sample_budget, options.tolerance)) {
      v.witness = WitnessKind::RefutingDirection;
      v.theta = gap->theta;
      v.gamma_x = gap->gx;
      v.gamma_y = gap->gy;
    } else {
      v.witness = WitnessKind::MultisetMismatch;
    }
  }

  double gamma_gap = 0.0, t_gap = 0.0;
  for (const auto& theta : interior_directions(x, options.cross_checks, options.sample_budget)) {
    const auto cx = gamma_closed_detail(x, theta, Gauge::Standard);
    const auto cy = gamma_closed_detail(y, theta, Gauge::Standard);
    gamma_gap = std::max(gamma_gap, std::abs(cx.gamma - cy.gamma));
    t_gap = std::max(t_gap, (cx.gibbs.t - cy.gibbs.t).cwiseAbs().maxCoeff());
    ++v.notes.probes;
  }
  v.notes.max_gamma_gap = gamma_gap;
  v.notes.max_standard_t_gap = t_gap;
  if (v.equivalent && gamma_gap > options.tolerance)
    v.notes.messages.push_back("cross-check gap exceeds tolerance");
  return v;
}

VectorSet transform_set(const VectorSet& x, const IntMatrix& t) {
  const std::size_t s = x.dim();
  if (t.size() != s) throw Error(ErrorKind::InvalidArgument, "transform has wrong size");
  for (const auto& row : t)
    if (row.size() != s) throw Error(ErrorKind::InvalidArgument, "transform has wrong size");
  if (determinant(RationalMatrix::from_rows(t, s)) == 0) throw Error(ErrorKind::SingularTransform, "det T = 0");
  std::vector<IntVector> out;
  for (const auto& v : x.vectors()) {
    IntVector w(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = dot(t[i], v);
    out.push_back(std::move(w));
  }
  return validate(out, s);
}

RationalVector transform_eta(const IntMatrix& t, const RationalVector& eta) {
  const std::size_t s = eta.size();
  const auto inv = inverse(RationalMatrix::from_rows(t, s).transpose());
  if (!inv) throw Error(ErrorKind::SingularTransform, "det T = 0");
  RationalVector out(s, Rational(0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) out[i] += (*inv)(i, k) * eta[k];
  return out;
}

IntMatrix shear_matrix(const IntVector& a) {
  const std::size_t s = a.size() + 1;
  IntMatrix t(s, IntVector(s, 0));
  for (std::size_t i = 0; i < s; ++i) t[i][i] = 1;
  for (std::size_t i = 0; i + 1 < s; ++i) t[i][s - 1] = -a[i];
  return t;
}

}  // namespace frobnd
