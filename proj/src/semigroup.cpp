#include "frobnd/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frobnd/exact_lp.hpp"

namespace frobnd {
namespace {

using Scratch = std::unordered_map<IntVector, std::uint8_t, IntVectorHash>;

std::int64_t ceil_to_int(double v) { return static_cast<std::int64_t>(std::ceil(v - 1e-12)); }

double norm(const IntVector& v) { return std::sqrt(static_cast<double>(norm_sq(v))); }

// Largest <h, omega> over Omega* for every half-space normal h.
std::vector<std::int64_t> omega_reach(const ConeGeometry& cone, const std::vector<IntVector>& omega) {
  std::vector<std::int64_t> out(cone.halfspaces.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& w : omega) out[i] = std::max(out[i], dot(cone.halfspaces[i], w));
  return out;
}

std::vector<Rational> to_rational(const std::vector<std::int64_t>& v) {
  std::vector<Rational> out;
  for (auto e : v) out.emplace_back(e);
  return out;
}

bool in_half_open_zonotope(const std::vector<IntVector>& gens, const IntVector& z) {
  const std::size_t s = z.size();
  const std::size_t k = gens.size();
  // Variables c (k), eps, slack (k):  sum c_j X_j = z,  c_j + eps + slack_j = 1.
  RationalMatrix a(s + k, 2 * k + 1);
  RationalVector b(s + k, Rational(0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = gens[j][i];
    b[i] = z[i];
  }
  for (std::size_t j = 0; j < k; ++j) {
    a(s + j, j) = 1;
    a(s + j, k) = 1;
    a(s + j, k + 1 + j) = 1;
    b[s + j] = 1;
  }
  RationalVector c(2 * k + 1, Rational(0));
  c[k] = 1;
  const LpResult r = maximize(a, b, c);
  return r.status == LpStatus::Optimal && r.objective > 0;
}

}  // namespace

MembershipOracle::MembershipOracle(const VectorSet& x) : x_(x) {}

MembershipOracle::MembershipOracle(const VectorSet& x, const IntVector& lo, const IntVector& hi)
    : x_(x), memo_(lo, hi, kUnknown) {}

std::uint8_t MembershipOracle::lookup(const IntVector& z, const Scratch& scratch) const {
  if (is_zero(z)) return kIn;
  if (!x_.cone().contains(z)) return kOut;
  if (memo_.inside(z)) return memo_[z];
  const auto it = scratch.find(z);
  return it == scratch.end() ? std::uint8_t{kUnknown} : it->second;
}

bool MembershipOracle::contains(const IntVector& z) {
  if (z.size() != x_.dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  if (is_zero(z)) return true;
  if (!x_.cone().contains(z) || !x_.lattice().contains(z)) return false;

  Scratch scratch;
  auto store = [&](const IntVector& v, std::uint8_t value) {
    if (memo_.inside(v))
      memo_[v] = value;
    else
      scratch[v] = value;
  };
  const auto& gens = x_.distinct();
  struct Frame {
    IntVector z;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({z, 0});
  while (!stack.empty()) {
    if (stack.back().next == 0 && lookup(stack.back().z, scratch) != kUnknown) {
      stack.pop_back();
      continue;
    }
    bool descended = false;
    bool found = false;
    while (stack.back().next < gens.size()) {
      IntVector child = sub(stack.back().z, gens[stack.back().next]);
      const std::uint8_t v = lookup(child, scratch);
      if (v == kIn) {
        found = true;
        break;
      }
      if (v == kOut) {
        ++stack.back().next;
        continue;
      }
      stack.push_back({std::move(child), 0});
      descended = true;
      break;
    }
    if (descended) continue;
    store(stack.back().z, found ? kIn : kOut);
    stack.pop_back();
  }
  return lookup(z, scratch) == kIn;
}

bool in_semigroup(const VectorSet& x, const IntVector& z) {
  MembershipOracle oracle(x);
  return oracle.contains(z);
}

std::vector<IntVector> omega_star(const VectorSet& x) {
  const auto& gens = x.distinct();
  const std::size_t s = x.dim();
  IntVector lo(s, 0), hi(s, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < s; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];
  std::vector<IntVector> out;
  for_each_point(lo, hi, [&](const IntVector& z) {
    if (x.lattice().contains(z) && x.cone().contains(z) && in_half_open_zonotope(gens, z)) out.push_back(z);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t zonotope_diameter_squared(const VectorSet& x) {
  const auto& gens = x.distinct();
  const std::size_t k = gens.size();
  if (k > 30) throw Error(ErrorKind::InvalidArgument, "too many distinct generators for the diameter scan");
  std::int64_t best = 0;
  const std::uint64_t combos = std::uint64_t{1} << (k - 1);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    IntVector v = gens[0];
    for (std::size_t j = 1; j < k; ++j) v = (mask >> (j - 1)) & 1 ? sub(v, gens[j]) : add(v, gens[j]);
    best = std::max(best, norm_sq(v));
  }
  return best;
}

std::int64_t min_integer_representation(const VectorSet& x, const IntVector& z) {
  if (!x.lattice().contains(z)) throw Error(ErrorKind::InvalidArgument, "point is not in the lattice");
  if (is_zero(z)) return 0;
  const auto& gens = x.distinct();
  const std::size_t s = x.dim();
  std::vector<std::size_t> basis, rest;
  std::vector<IntVector> chosen;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    chosen.push_back(gens[j]);
    if (basis.size() < s && rank(chosen, s) == basis.size() + 1) {
      basis.push_back(j);
    } else {
      chosen.pop_back();
      rest.push_back(j);
    }
  }
  RationalMatrix bm(s, s);
  for (std::size_t c = 0; c < s; ++c)
    for (std::size_t i = 0; i < s; ++i) bm(i, c) = gens[basis[c]][i];
  const Rational det_q = determinant(bm);
  const auto inv = inverse(bm);
  const std::int64_t det = static_cast<std::int64_t>(numerator(det_q));
  std::vector<IntVector> adj(s, IntVector(s));
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) adj[r][c] = static_cast<std::int64_t>(numerator(Rational((*inv)(r, c) * det_q)));

  for (std::int64_t bound = 1;; ++bound) {
    IntVector lo(rest.size(), -bound), hi(rest.size(), bound);
    bool found = false;
    auto try_free = [&](const IntVector& a_rest) {
      if (found) return;
      IntVector rhs = z;
      for (std::size_t t = 0; t < rest.size(); ++t) rhs = sub(rhs, scale(gens[rest[t]], a_rest[t]));
      for (std::size_t r = 0; r < s; ++r) {
        const std::int64_t num = dot(adj[r], rhs);
        if (num % det != 0 || std::abs(num / det) > bound) return;
      }
      found = true;
    };
    if (rest.empty())
      try_free(IntVector{});
    else
      for_each_point(lo, hi, try_free);
    if (found) return bound;
  }
}

SaturationContext saturation_context(const VectorSet& x) {
  SaturationContext ctx;
  ctx.omega_star = omega_star(x);
  for (const auto& w : ctx.omega_star) ctx.M = std::max(ctx.M, min_integer_representation(x, w));
  ctx.g0.assign(x.dim(), 0);
  for (const auto& g : x.distinct()) ctx.g0 = add(ctx.g0, g);
  ctx.g0 = scale(ctx.g0, ctx.M);
  ctx.r0_squared = zonotope_diameter_squared(x);
  ctx.r0 = std::sqrt(static_cast<double>(ctx.r0_squared));
  return ctx;
}

bool is_saturated(MembershipOracle& oracle, const SaturationContext& ctx, const IntVector& g) {
  if (!oracle.contains(g)) throw Error(ErrorKind::NotInSemigroup, "apex " + format(g) + " is not in J");
  for (const auto& w : ctx.omega_star)
    if (!oracle.contains(add(g, w))) return false;
  return true;
}

bool is_saturated(const VectorSet& x, const SaturationContext& ctx, const IntVector& g) {
  const auto& cone = x.cone();
  std::vector<std::int64_t> upper = omega_reach(cone, ctx.omega_star);
  for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = std::max<std::int64_t>(0, upper[i] + dot(cone.halfspaces[i], g));
  const auto [lo, hi] = slab_box(cone, to_rational(upper));
  MembershipOracle oracle(x, lo, hi);
  return is_saturated(oracle, ctx, g);
}

FrobeniusSet frobenius_set(const VectorSet& x, const SaturationContext& ctx, const FrobeniusOptions& options) {
  const auto& cone = x.cone();
  const auto& hs = cone.halfspaces;
  const std::vector<std::int64_t> reach = omega_reach(cone, ctx.omega_star);
  double w = 2.0 * ctx.r0;

  for (int round = 1; round <= options.max_rounds; ++round, w *= 2.0) {
    std::vector<std::int64_t> inner(hs.size()), outer(hs.size()), memo_upper(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      inner[i] = dot(hs[i], ctx.g0) + ceil_to_int(w * norm(hs[i]));
      outer[i] = inner[i] + ceil_to_int(ctx.r0 * norm(hs[i]));
      memo_upper[i] = outer[i] + reach[i];
    }
    const auto [mlo, mhi] = slab_box(cone, to_rational(memo_upper));
    MembershipOracle oracle(x, mlo, mhi);
    std::unordered_map<IntVector, bool, IntVectorHash> sat_cache;
    auto saturated = [&](const IntVector& z) {
      const auto it = sat_cache.find(z);
      if (it != sat_cache.end()) return it->second;
      bool v = cone.contains(z) && oracle.contains(z);
      if (v)
        for (const auto& om : ctx.omega_star)
          if (!oracle.contains(add(z, om))) {
            v = false;
            break;
          }
      sat_cache.emplace(z, v);
      return v;
    };
    auto within = [&](const IntVector& z, const std::vector<std::int64_t>& upper) {
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const auto v = dot(hs[i], z);
        if (v < 0 || v > upper[i]) return false;
      }
      return true;
    };

    std::vector<IntVector> apexes;
    const auto [rlo, rhi] = slab_box(cone, to_rational(inner));
    for_each_point(rlo, rhi, [&](const IntVector& z) {
      if (!x.lattice().contains(z) || !within(z, inner) || !saturated(z)) return;
      for (const auto& g : x.distinct())
        if (saturated(sub(z, g))) return;
      for (const auto& om : ctx.omega_star)
        if (!is_zero(om) && saturated(sub(z, om))) return;
      apexes.push_back(z);
    });

    bool escaped = false;
    const auto [slo, shi] = slab_box(cone, to_rational(outer));
    for_each_point(slo, shi, [&](const IntVector& z) {
      if (escaped || within(z, inner) || !within(z, outer) || !x.lattice().contains(z)) return;
      if (!saturated(z)) return;
      for (const auto& f : apexes)
        if (cone.contains(sub(z, f))) return;
      escaped = true;
    });
    if (escaped) continue;

    for (std::size_t a = 0; a < apexes.size(); ++a)
      for (std::size_t b = 0; b < apexes.size(); ++b)
        if (a != b && cone.contains(sub(apexes[a], apexes[b])))
          throw std::logic_error("Frobenius apexes are not an antichain");
    std::sort(apexes.begin(), apexes.end());
    FrobeniusSet out;
    out.apexes = std::move(apexes);
    out.rounds = round;
    out.region_width = w;
    return out;
  }
  throw Error(ErrorKind::RegionGrowthExceeded,
              "shell check still failing after " + std::to_string(options.max_rounds) + " rounds");
}

}  // namespace frobnd
