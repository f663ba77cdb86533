#include "frobnd/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace frobnd {
namespace {

using Scratch = std::unordered_map<IntVector, BigInt, IntVectorHash>;

// Distinct generators with their multiplicity in X.
std::vector<std::pair<IntVector, std::int64_t>> grouped(const VectorSet& x) {
  std::map<IntVector, std::int64_t> counts;
  for (const auto& v : x.vectors()) ++counts[v];
  return {counts.begin(), counts.end()};
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void collect(const VectorSet& x, std::size_t j, const IntVector& rem, IntVector& u, std::vector<IntVector>& out) {
  const IntVector& g = x[j];
  const auto& a = x.alpha_integer();
  const std::int64_t step = dot(a, g);
  const std::int64_t budget = dot(a, rem);
  if (j + 1 == x.size()) {
    if (budget % step != 0) return;
    const std::int64_t k = budget / step;
    if (scale(g, k) != rem) return;
    u[j] = k;
    out.push_back(u);
    u[j] = 0;
    return;
  }
  IntVector r = rem;
  for (std::int64_t k = 0; k * step <= budget; ++k) {
    if (!x.cone().contains(r)) break;
    u[j] = k;
    collect(x, j + 1, r, u, out);
    r = sub(r, g);
  }
  u[j] = 0;
}

}  // namespace

MultiplicityTable::MultiplicityTable(const VectorSet& x) : x_(x), groups_(grouped(x)) {}

MultiplicityTable::MultiplicityTable(const VectorSet& x, const IntVector& lo, const IntVector& hi)
    : x_(x), groups_(grouped(x)), values_(lo, hi), known_(lo, hi, 0) {}

MultiplicityTable MultiplicityTable::covering(const VectorSet& x, const std::vector<Rational>& upper) {
  const auto [lo, hi] = slab_box(x.cone(), upper);
  return MultiplicityTable(x, lo, hi);
}

const BigInt* MultiplicityTable::lookup(const IntVector& z, const Scratch& scratch) const {
  if (known_.inside(z)) return known_[z] ? &values_[z] : nullptr;
  const auto it = scratch.find(z);
  return it == scratch.end() ? nullptr : &it->second;
}

BigInt MultiplicityTable::multiplicity(const IntVector& z) {
  if (z.size() != x_.dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  if (is_zero(z)) return 1;
  if (!x_.cone().contains(z) || !x_.lattice().contains(z)) return 0;

  const auto& gens = groups_;
  Scratch scratch;
  struct Frame {
    IntVector z;
    std::size_t next;
    BigInt acc;
  };
  std::vector<Frame> stack;
  stack.push_back({z, 0, 0});
  while (!stack.empty()) {
    if (stack.back().next == 0 && lookup(stack.back().z, scratch)) {
      stack.pop_back();
      continue;
    }
    bool descended = false;
    while (stack.back().next < gens.size()) {
      Frame& f = stack.back();
      const auto& [g, count] = gens[f.next];
      IntVector child = sub(f.z, g);
      if (is_zero(child)) {
        f.acc += count;
        ++f.next;
        continue;
      }
      if (!x_.cone().contains(child)) {
        ++f.next;
        continue;
      }
      if (const BigInt* v = lookup(child, scratch)) {
        if (*v != 0) f.acc += *v * count;
        ++f.next;
        continue;
      }
      stack.push_back({std::move(child), 0, 0});
      descended = true;
      break;
    }
    if (descended) continue;
    Frame& f = stack.back();
    if (known_.inside(f.z)) {
      values_[f.z] = std::move(f.acc);
      known_[f.z] = 1;
    } else {
      scratch[f.z] = std::move(f.acc);
    }
    stack.pop_back();
  }
  return *lookup(z, scratch);
}

void MultiplicityTable::fill() {
  if (known_.cells() == 0) return;
  const auto& a = x_.alpha_integer();
  std::vector<std::pair<std::int64_t, IntVector>> order;
  for_each_point(known_.lo(), known_.hi(), [&](const IntVector& z) {
    if (x_.cone().contains(z) && x_.lattice().contains(z)) order.emplace_back(dot(a, z), z);
  });
  std::sort(order.begin(), order.end());
  for (const auto& [level, z] : order) multiplicity(z);
}

std::vector<IntVector> representations(const VectorSet& x, const IntVector& z) {
  if (z.size() != x.dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  std::vector<IntVector> out;
  if (!x.cone().contains(z) || !x.lattice().contains(z)) return out;
  IntVector u(x.size(), 0);
  collect(x, 0, z, u, out);
  return out;
}

BigInt multinomial(const IntVector& u) {
  BigInt r = 1;
  std::int64_t total = 0;
  for (auto k : u) {
    total += k;
    r *= binomial(total, k);
  }
  return r;
}

BigInt multiplicity_by_formula(const VectorSet& x, const IntVector& z) {
  BigInt sum = 0;
  for (const auto& u : representations(x, z)) sum += multinomial(u);
  return sum;
}

BigInt multiplicity(const VectorSet& x, MultiplicityTable& table, const IntVector& z) {
  if (table.vectors().vectors() != x.vectors())
    throw Error(ErrorKind::InvalidArgument, "table was built for a different vector set");
  return table.multiplicity(z);
}

NearestPoint nearest_point(MultiplicityTable& table, const std::vector<double>& x, double radius,
                           const std::vector<IntVector>& face) {
  const VectorSet& xs = table.vectors();
  const std::size_t s = xs.dim();
  if (x.size() != s) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  const double reach = radius + 1e-9;
  IntVector lo(s), hi(s);
  for (std::size_t i = 0; i < s; ++i) {
    lo[i] = static_cast<std::int64_t>(std::floor(x[i] - reach));
    hi[i] = static_cast<std::int64_t>(std::ceil(x[i] + reach));
  }
  std::vector<std::pair<double, IntVector>> candidates;
  for_each_point(lo, hi, [&](const IntVector& z) {
    for (const auto& n : face)
      if (dot(n, z) != 0) return;
    if (!xs.cone().contains(z) || !xs.lattice().contains(z)) return;
    double d2 = 0.0;
    for (std::size_t i = 0; i < s; ++i) d2 += (static_cast<double>(z[i]) - x[i]) * (static_cast<double>(z[i]) - x[i]);
    const double d = std::sqrt(d2);
    if (d <= reach) candidates.emplace_back(d, z);
  });
  std::sort(candidates.begin(), candidates.end());

  std::optional<NearestPoint> best;
  for (const auto& [d, z] : candidates) {
    if (best && d > best->distance + 1e-9) break;
    BigInt m = table.multiplicity(z);
    if (m == 0) continue;
    if (!best) {
      best = NearestPoint{z, d, std::move(m)};
    } else if (m < best->m || (m == best->m && z < best->z)) {
      best->z = z;
      best->m = std::move(m);
    }
  }
  if (!best) throw Error(ErrorKind::InvalidArgument, "no semigroup point within the search radius");
  return *best;
}

BigInt multiplicity_at(MultiplicityTable& table, const SaturationContext& ctx, const std::vector<double>& x) {
  if (x.size() != table.vectors().dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  if (!table.vectors().cone().contains(x, 1e-9)) throw Error(ErrorKind::InvalidArgument, "point is outside the cone");
  return nearest_point(table, x, ctx.r0).m;
}

HausdorffDistance hausdorff_A(const VectorSet& x, const IntVector& z, const IntVector& z2) {
  const auto a = representations(x, z);
  const auto b = representations(x, z2);
  if (a.empty()) throw Error(ErrorKind::EmptyRepresentationSet, format(z) + " has no representation");
  if (b.empty()) throw Error(ErrorKind::EmptyRepresentationSet, format(z2) + " has no representation");
  auto directed = [](const std::vector<IntVector>& p, const std::vector<IntVector>& q) {
    std::int64_t worst = 0;
    for (const auto& u : p) {
      std::int64_t nearest = -1;
      for (const auto& v : q) {
        const auto d = norm_sq(sub(u, v));
        if (nearest < 0 || d < nearest) nearest = d;
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  HausdorffDistance h;
  h.squared = std::max(directed(a, b), directed(b, a));
  h.value = std::sqrt(static_cast<double>(h.squared));
  return h;
}

double log_bigint(const BigInt& v) {
  if (v <= 0) throw Error(ErrorKind::InvalidArgument, "log of a non-positive integer");
  const std::size_t bits = msb(v);
  if (bits < 60) return std::log(static_cast<double>(v));
  const std::size_t shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace frobnd
