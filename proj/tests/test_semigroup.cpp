#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "frobnd/semigroup.hpp"
#include "oracles.hpp"

using namespace frobnd;

namespace {

const std::vector<IntVector> kExample{{3, 0}, {1, 2}, {0, 3}};

// Functional level that bounds every point of box [-r, r]^s from above.
std::int64_t level_for(const IntVector& a, std::int64_t r) {
  std::int64_t l = 0;
  for (auto e : a) l += std::abs(e) * r;
  return l;
}

}  // namespace

TEST_CASE("membership examples") {
  const VectorSet ex = validate(kExample, 2);
  CHECK_FALSE(in_semigroup(ex, {2, 1}));
  CHECK(in_semigroup(ex, {0, 0}));
  const VectorSet coins = validate({{3}, {5}}, 1);
  CHECK_FALSE(in_semigroup(coins, {7}));
  CHECK(in_semigroup(coins, {8}));
  CHECK_FALSE(in_semigroup(coins, {-3}));
}

TEST_CASE("membership agrees with brute-force path enumeration") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 30; ++n) {
    const std::size_t s = 1 + n % 3;
    const VectorSet x = oracle::random_set(rng, s, 2 + n % 3, s == 1 ? 1 : -1, 4);
    const IntVector a = oracle::positive_functional(x.vectors(), s);
    REQUIRE_FALSE(a.empty());
    const std::int64_t r = s == 3 ? 5 : 8;
    const auto reach = oracle::semigroup_points(x.vectors(), a, level_for(a, r));
    MembershipOracle mem(x);
    for_each_point(IntVector(s, -r), IntVector(s, r), [&](const IntVector& z) {
      CHECK_MESSAGE(mem.contains(z) == (reach.count(z) > 0), format(z));
    });
  }
}

TEST_CASE("omega star of small sets") {
  CHECK(omega_star(validate({{1, 0}, {0, 1}}, 2)) == std::vector<IntVector>{{0, 0}});
  CHECK(omega_star(validate({{2}, {3}}, 1)) == std::vector<IntVector>{{0}, {1}, {2}, {3}, {4}});
  // Brute-force enumeration of the half-open zonotope, frozen.
  CHECK(omega_star(validate(kExample, 2)) == std::vector<IntVector>{{0, 0}, {1, 2}, {2, 1}, {2, 4}, {3, 3}});
}

TEST_CASE("saturation context of small sets") {
  const auto orth = saturation_context(validate({{1, 0}, {0, 1}}, 2));
  CHECK(orth.M == 0);
  CHECK(orth.g0 == IntVector{0, 0});
  const auto ex = saturation_context(validate(kExample, 2));
  CHECK(ex.M == 2);
  CHECK(ex.g0 == IntVector{8, 10});
  CHECK(ex.r0_squared == 41);
  const auto coins = saturation_context(validate({{3}, {5}}, 1));
  CHECK(coins.g0 == IntVector{16});
  CHECK(coins.r0 == doctest::Approx(8.0));
}

TEST_CASE("is_saturated examples") {
  const VectorSet coins = validate({{3}, {5}}, 1);
  const auto cc = saturation_context(coins);
  CHECK(is_saturated(coins, cc, {8}));
  CHECK_FALSE(is_saturated(coins, cc, {5}));
  const VectorSet ex = validate(kExample, 2);
  const auto ce = saturation_context(ex);
  CHECK(is_saturated(ex, ce, {1, 2}));
  CHECK(is_saturated(ex, ce, ce.g0));
  CHECK_THROWS_AS(is_saturated(ex, ce, {2, 1}), Error);
}

TEST_CASE("g0 is saturated for random sets") {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 20; ++n) {
    const VectorSet x = oracle::random_set(rng, 1 + n % 2, 2 + n % 2, 0, 4);
    const auto ctx = saturation_context(x);
    CHECK(is_saturated(x, ctx, ctx.g0));
  }
}

TEST_CASE("saturation agrees with direct enumeration") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 12; ++n) {
    const std::size_t s = 1 + n % 2;
    const VectorSet x = oracle::random_set(rng, s, 2 + n % 2, 0, 4);
    const auto ctx = saturation_context(x);
    const IntVector a = oracle::positive_functional(x.vectors(), s);
    const std::int64_t g_level = oracle::idot(ctx.g0, a);
    // A box of side 3 diam(Omega) around each candidate; every lattice point in
    // it that lies in g + C must be reachable.
    const std::int64_t side = 3 * static_cast<std::int64_t>(std::ceil(ctx.r0)) + 1;
    const auto reach = oracle::semigroup_points(x.vectors(), a, g_level + level_for(a, side) + 1);
    MembershipOracle mem(x);
    for (const auto& g : reach) {
      if (oracle::idot(g, a) > g_level) continue;
      bool direct = true;
      IntVector lo = g, hi = g;
      for (auto& e : hi) e += side;
      for (auto& e : lo) e -= side;
      for_each_point(lo, hi, [&](const IntVector& z) {
        if (!direct || !x.cone().contains(sub(z, g)) || !in_lattice(x.lattice(), z)) return;
        direct = reach.count(z) > 0;
      });
      CHECK_MESSAGE(is_saturated(mem, ctx, g) == direct, format(g));
    }
  }
}

TEST_CASE("frobenius set examples") {
  const VectorSet ex = validate(kExample, 2);
  CHECK(frobenius_set(ex, saturation_context(ex)).apexes == std::vector<IntVector>{{0, 3}, {1, 2}});
  const VectorSet coins = validate({{3}, {5}}, 1);
  CHECK(frobenius_set(coins, saturation_context(coins)).apexes == std::vector<IntVector>{{8}});
  const VectorSet orth = validate({{1, 0}, {0, 1}}, 2);
  CHECK(frobenius_set(orth, saturation_context(orth)).apexes == std::vector<IntVector>{{0, 0}});
}

TEST_CASE("frobenius numbers of two coins") {
  // f(a, b) = ab - a - b, apex f + 1.
  for (std::int64_t a = 2; a <= 7; ++a)
    for (std::int64_t b = a + 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const VectorSet x = validate({{a}, {b}}, 1);
      CHECK(frobenius_set(x, saturation_context(x)).apexes == std::vector<IntVector>{{a * b - a - b + 1}});
    }
}

TEST_CASE("frobenius set matches a direct minimal-apex search") {
  std::mt19937_64 rng(24);
  for (int n = 0; n < 12; ++n) {
    const VectorSet x = oracle::random_set(rng, 2, 2 + n % 2, 0, 3);
    const auto ctx = saturation_context(x);
    const auto fs = frobenius_set(x, ctx);
    MembershipOracle mem(x);
    // Every apex is saturated; apexes form an antichain in both orders.
    for (const auto& g : fs.apexes) CHECK(is_saturated(mem, ctx, g));
    for (const auto& g : fs.apexes)
      for (const auto& h : fs.apexes)
        if (g != h) {
          CHECK_FALSE(mem.contains(sub(g, h)));
          CHECK_FALSE(x.cone().contains(sub(g, h)));
        }
    // No saturated point of J in a box around g0 lies strictly below an apex,
    // and every saturated point lies above some apex.
    const IntVector a = oracle::positive_functional(x.vectors(), 2);
    const auto pts = oracle::semigroup_points(x.vectors(), a, 2 * oracle::idot(ctx.g0, a) + 2);
    for (const auto& z : pts) {
      if (!is_saturated(mem, ctx, z)) continue;
      bool above = false;
      for (const auto& g : fs.apexes) {
        const IntVector d = sub(z, g);
        above = above || x.cone().contains(d);
        if (!is_zero(d)) CHECK_FALSE_MESSAGE(x.cone().contains(sub(g, z)), format(z));
      }
      CHECK_MESSAGE(above, format(z));
    }
  }
}

TEST_CASE("relative density") {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 4; ++n) {
    const VectorSet x = oracle::random_set(rng, 2, 3, 0, 4);
    const auto ctx = saturation_context(x);
    const IntVector a = oracle::positive_functional(x.vectors(), 2);
    const auto pts = oracle::semigroup_points(x.vectors(), a, level_for(a, 50) + level_for(a, static_cast<std::int64_t>(ctx.r0) + 1));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int done = 0;
    while (done < 100) {
      // Random point of the cone from random ray weights, |x| <= 50.
      std::vector<double> p(2, 0.0);
      for (const auto& r : x.cone().extreme_rays) {
        const double w = u(rng);
        for (int i = 0; i < 2; ++i) p[i] += w * r[i];
      }
      const double len = std::hypot(p[0], p[1]);
      const double scale_to = 50.0 * u(rng);
      for (auto& e : p) e *= scale_to / len;
      double best = 1e300;
      for (const auto& z : pts) best = std::min(best, std::hypot(z[0] - p[0], z[1] - p[1]));
      CHECK(best < ctx.r0);
      ++done;
    }
  }
}
