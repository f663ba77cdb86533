#include <cmath>
#include <random>

#include "doctest.h"
#include "frobnd/multiplicity.hpp"
#include "oracles.hpp"

using namespace frobnd;

namespace {

const std::vector<IntVector> kExample{{3, 0}, {1, 2}, {0, 3}};

BigInt binomial(std::int64_t n, std::int64_t k) { return oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k)); }

}  // namespace

TEST_CASE("representation examples") {
  CHECK(representations(validate(kExample, 2), {3, 3}) == std::vector<IntVector>{{1, 0, 1}});
  CHECK(representations(validate({{1, 0}, {0, 1}}, 2), {4, 7}) == std::vector<IntVector>{{4, 7}});
  CHECK(representations(validate({{3}, {5}}, 1), {15}) == std::vector<IntVector>{{0, 3}, {5, 0}});
  CHECK(representations(validate({{3}, {5}}, 1), {7}).empty());
}

TEST_CASE("multiplicity examples") {
  const VectorSet orth = validate({{1, 0}, {0, 1}}, 2);
  MultiplicityTable t(orth);
  CHECK(t.multiplicity({3, 2}) == 10);
  CHECK(t.multiplicity({0, 0}) == 1);
  CHECK(t.multiplicity({10, 10}) == 184756);
  CHECK(t.multiplicity({-1, 0}) == 0);
  const VectorSet ex = validate(kExample, 2);
  MultiplicityTable te(ex);
  CHECK(te.multiplicity({3, 3}) == 2);
  CHECK(te.multiplicity({2, 1}) == 0);
  CHECK(multiplicity_by_formula(ex, {3, 3}) == 2);
}

TEST_CASE("binomial grid") {
  const VectorSet orth = validate({{1, 0}, {0, 1}}, 2);
  MultiplicityTable t(orth, {0, 0}, {30, 30});
  t.fill();
  for (std::int64_t a = 0; a <= 30; ++a)
    for (std::int64_t b = 0; b <= 30; ++b) CHECK(t.multiplicity({a, b}) == binomial(a + b, a));
  CHECK(t.multiplicity({30, 30}).str() == "118264581564861424");
}

TEST_CASE("duplicates count twice") {
  const VectorSet x = validate({{1, 0}, {1, 0}, {0, 1}}, 2);
  MultiplicityTable t(x);
  // Walks to (1,1): two orders times two copies of (1,0).
  CHECK(t.multiplicity({1, 1}) == 4);
  CHECK(multiplicity_by_formula(x, {1, 1}) == 4);
}

TEST_CASE("recurrence agrees with the factorial formula") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 30; ++n) {
    const std::size_t s = 1 + n % 3;
    const VectorSet x = oracle::random_set(rng, s, 2 + n % 3, 0, 4);
    const IntVector a = oracle::positive_functional(x.vectors(), s);
    MultiplicityTable t(x);
    const std::int64_t r = s == 3 ? 6 : 10;
    for_each_point(IntVector(s, 0), IntVector(s, r), [&](const IntVector& z) {
      const BigInt expect = oracle::formula_count(x.vectors(), a, z);
      CHECK_MESSAGE(t.multiplicity(z) == expect, format(z));
      CHECK(multiplicity_by_formula(x, z) == expect);
    });
  }
}

TEST_CASE("recurrence invariant inside a filled box") {
  const VectorSet x = validate({{2, 1}, {1, 2}, {1, 1}}, 2);
  MultiplicityTable t(x, {0, 0}, {12, 12});
  t.fill();
  for_each_point(IntVector{0, 0}, IntVector{12, 12}, [&](const IntVector& z) {
    if (is_zero(z)) return;
    BigInt sum = 0;
    for (const auto& v : x.vectors()) sum += t.multiplicity(sub(z, v));
    CHECK(t.multiplicity(z) == sum);
  });
}

TEST_CASE("super-multiplicativity") {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 10; ++n) {
    const VectorSet x = oracle::random_set(rng, 2, 2 + n % 3, 0, 3);
    MultiplicityTable t(x);
    for_each_point(IntVector{0, 0}, IntVector{6, 6}, [&](const IntVector& z) {
      const BigInt mz = t.multiplicity(z);
      if (mz == 0) return;
      for_each_point(IntVector{0, 0}, IntVector{6, 6}, [&](const IntVector& w) {
        const BigInt mw = t.multiplicity(w);
        if (mw != 0) CHECK(t.multiplicity(add(z, w)) >= mz * mw);
      });
    });
  }
}

TEST_CASE("multiplicity at real points") {
  const VectorSet orth = validate({{1, 0}, {0, 1}}, 2);
  MultiplicityTable t(orth);
  const auto co = saturation_context(orth);
  CHECK(multiplicity_at(t, co, {2.4, 1.9}) == 6);
  CHECK(multiplicity_at(t, co, {3.0, 2.0}) == 10);
  CHECK_THROWS_AS(multiplicity_at(t, co, {-1.0, 2.0}), Error);

  const VectorSet ex = validate(kExample, 2);
  MultiplicityTable te(ex);
  const auto ce = saturation_context(ex);
  // (1,2) and (0,3) are equidistant from (0.6, 2.6); both have m = 1.
  const auto np = nearest_point(te, {0.6, 2.6}, ce.r0);
  CHECK(np.z == IntVector{0, 3});
  CHECK(np.m == 1);
  CHECK(multiplicity_at(te, ce, {0.6, 2.6}) == 1);
}

TEST_CASE("nearest point matches exhaustive search") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 12.0);
  for (int n = 0; n < 6; ++n) {
    const VectorSet x = oracle::random_set(rng, 2, 3, 0, 4);
    const auto ctx = saturation_context(x);
    MultiplicityTable t(x);
    const IntVector a = oracle::positive_functional(x.vectors(), 2);
    const auto pts = oracle::semigroup_points(x.vectors(), a, (std::abs(a[0]) + std::abs(a[1])) * 40);
    for (int k = 0; k < 40; ++k) {
      std::vector<double> p{u(rng), u(rng)};
      if (!x.cone().contains(p, 0.0)) continue;
      double best = 1e300;
      for (const auto& z : pts) best = std::min(best, std::hypot(z[0] - p[0], z[1] - p[1]));
      BigInt m_min = -1;
      for (const auto& z : pts) {
        if (std::hypot(z[0] - p[0], z[1] - p[1]) > best + 1e-9) continue;
        const BigInt m = oracle::formula_count(x.vectors(), a, z);
        if (m_min < 0 || m < m_min) m_min = m;
      }
      CHECK(multiplicity_at(t, ctx, p) == m_min);
    }
  }
}

TEST_CASE("hausdorff examples") {
  const VectorSet coins = validate({{3}, {5}}, 1);
  const auto h = hausdorff_A(coins, {15}, {16});
  CHECK(h.squared == 13);
  CHECK(h.value == doctest::Approx(std::sqrt(13.0)));
  CHECK(hausdorff_A(coins, {15}, {15}).squared == 0);
  CHECK_THROWS_AS(hausdorff_A(coins, {7}, {8}), Error);
  const VectorSet orth = validate({{1, 0}, {0, 1}}, 2);
  CHECK(hausdorff_A(orth, {4, 2}, {5, 2}).squared == 1);
}

TEST_CASE("hausdorff stability") {
  const VectorSet x = validate({{3}, {5}, {7}}, 1);
  auto shell_max = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t best = 0;
    for (std::int64_t z = lo; z <= hi; ++z)
      for (std::int64_t d = 1; d <= 3; ++d) {
        if (!in_semigroup(x, {z}) || !in_semigroup(x, {z + d})) continue;
        best = std::max(best, hausdorff_A(x, {z}, {z + d}).squared);
      }
    return std::sqrt(static_cast<double>(best));
  };
  CHECK(shell_max(40, 50) <= 2.0 * shell_max(10, 20));
}

TEST_CASE("polynomial variation") {
  const VectorSet x = validate({{2, 0}, {1, 1}, {0, 2}, {1, 2}}, 2);
  MultiplicityTable t(x);
  const std::vector<IntVector> steps{{1, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 1}};
  auto kappa_over = [&](std::int64_t lo, std::int64_t hi) {
    double kappa = 0.0;
    for (std::int64_t a = lo; a <= hi; ++a)
      for (std::int64_t b = lo; b <= hi; ++b) {
        const IntVector z{a, b};
        const BigInt mz = t.multiplicity(z);
        if (mz == 0) continue;
        for (const auto& d : steps) {
          const BigInt mw = t.multiplicity(add(z, d));
          if (mw == 0) continue;
          const double gap = std::abs(log_bigint(mz) - log_bigint(mw));
          kappa = std::max(kappa, gap / std::log(2.0 + std::hypot(double(a), double(b))));
        }
      }
    return kappa;
  };
  const double fitted = kappa_over(4, 12);
  CHECK(fitted > 0.0);
  CHECK(kappa_over(30, 40) <= fitted);
}

TEST_CASE("log of big integers") {
  CHECK(log_bigint(BigInt(1)) == 0.0);
  CHECK(log_bigint(BigInt(184756)) == doctest::Approx(std::log(184756.0)).epsilon(1e-14));
  const BigInt huge = oracle::factorial(300);
  double expect = 0.0;
  for (int i = 2; i <= 300; ++i) expect += std::log(double(i));
  CHECK(log_bigint(huge) == doctest::Approx(expect).epsilon(1e-12));
}
