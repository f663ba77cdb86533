// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "frobnd/rigidity.hpp"
#include "oracles.hpp"

using namespace frobnd;

namespace {

// Pinned tolerances.
constexpr double kClosedTol = 1e-10;
constexpr double kPeakTol = 1e-8;
constexpr double kFdRelTol = 1e-5;
constexpr double kGaugeTol = 1e-10;
constexpr double kOneDimTol = 0.02;
constexpr double kTransformTol = 1e-8;

const std::vector<IntVector> kExample{{3, 0}, {1, 2}, {0, 3}};
const std::vector<IntVector> kOrthant{{1, 0}, {0, 1}};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome frobenius_examples() {
  Outcome r;
  const VectorSet ex = validate(kExample, 2);
  r.require(frobenius_set(ex, saturation_context(ex)).apexes == std::vector<IntVector>{{0, 3}, {1, 2}},
            "example apexes differ");
  const VectorSet coins = validate({{3}, {5}}, 1);
  r.require(frobenius_set(coins, saturation_context(coins)).apexes == std::vector<IntVector>{{8}},
            "coin apex differs");
  return r;
}

Outcome lattice_and_semigroup() {
  Outcome r;
  const VectorSet x = validate(kExample, 2);
  MembershipOracle mem(x);
  for (std::int64_t a = 0; a <= 20; ++a)
    for (std::int64_t b = 0; b <= 20; ++b) {
      const bool l = (a + b) % 3 == 0;
      r.require(in_lattice(x.lattice(), {a, b}) == l, "lattice at " + format(IntVector{a, b}));
      r.require(mem.contains({a, b}) == (l && b != 1), "semigroup at " + format(IntVector{a, b}));
    }
  return r;
}

Outcome binomials() {
  Outcome r;
  MultiplicityTable t(validate(kOrthant, 2), {0, 0}, {30, 30});
  t.fill();
  for (std::int64_t a = 0; a <= 30; ++a)
    for (std::int64_t b = 0; b <= 30; ++b) {
      const BigInt expect = oracle::factorial(a + b) / (oracle::factorial(a) * oracle::factorial(b));
      r.require(t.multiplicity({a, b}) == expect, "m at " + format(IntVector{a, b}));
    }
  r.require(t.multiplicity({30, 30}).str().size() == 18, "m(30,30) digit count");
  return r;
}

Outcome formula_vs_recurrence() {
  Outcome r;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> ds(1, 3), dm(2, 4);
  int points = 0;
  for (int n = 0; n < 50; ++n) {
    const std::size_t s = ds(rng), m = dm(rng);
    const VectorSet x = oracle::random_set(rng, s, std::max<std::size_t>(m, s), 0, 4);
    const IntVector a = oracle::positive_functional(x.vectors(), s);
    MultiplicityTable t(x);
    for_each_point(IntVector(s, 0), IntVector(s, 10), [&](const IntVector& z) {
      const BigInt rec = t.multiplicity(z);
      if (rec == 0 && !in_semigroup(x, z)) return;
      ++points;
      r.require(rec == oracle::formula_count(x.vectors(), a, z), "instance " + std::to_string(n) + " at " + format(z));
    });
  }
  if (r.ok) r.detail = std::to_string(points) + " points of J";
  return r;
}

Outcome closed_form_values() {
  Outcome r;
  const VectorSet orth = validate(kOrthant, 2);
  const double g = gamma_closed(orth, {std::sqrt(0.5), std::sqrt(0.5)});
  r.require(std::abs(g - std::sqrt(2.0) * std::log(2.0)) <= kClosedTol, "gamma(pi/4) off by " + num(g - std::sqrt(2.0) * std::log(2.0)));
  const VectorSet ex = validate(kExample, 2);
  const PeakLocation peak = normalized_gamma_peak(ex, 90);
  r.require(std::abs(peak.value - std::log(3.0)) <= kPeakTol, "peak value off by " + num(peak.value - std::log(3.0)));
  r.require(std::abs(peak.grid_angle - std::atan2(5.0, 4.0)) <= peak.grid_step, "peak angle outside one grid step");
  return r;
}

Outcome empirical_vs_closed() {
  Outcome r;
  std::mt19937_64 rng(606);
  const int k_max = 150;
  const double slack = empirical_slack(k_max);
  double worst = 0.0;
  for (int n = 0; n < 10; ++n) {
    const VectorSet x = oracle::random_coplanar(rng, n < 7 ? 2 : 3, 3);
    const auto dirs = interior_directions(x, 5, 7 * n);
    MultiplicityTable table = growth_table(x, dirs, k_max);
    for (const auto& th : dirs) {
      const double gap = std::abs(*gamma_empirical(table, th, k_max).gamma_empirical - gamma_closed(x, th));
      worst = std::max(worst, gap);
      r.require(gap <= slack, "instance " + std::to_string(n) + " gap " + num(gap));
    }
  }
  if (r.ok) r.detail = "worst gap " + num(worst) + " <= " + num(slack);
  return r;
}

double log_z(const VectorSet& x, const Eigen::VectorXd& t) {
  double z = 0.0;
  for (const auto& v : x.vectors()) {
    double e = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) e += t[i] * v[i];
    z += std::exp(e);
  }
  return std::log(z);
}

Outcome maxent_checks() {
  Outcome r;
  std::mt19937_64 rng(707);
  std::normal_distribution<double> gauss(0.0, 0.6);
  for (int n = 0; n < 20; ++n) {
    const VectorSet x = n % 2 ? oracle::random_coplanar(rng, 2 + n % 3 / 2, 3) : oracle::random_set(rng, 2 + n % 2, 4, -1, 3);
    const std::size_t s = x.dim();
    Eigen::VectorXd t(s);
    for (std::size_t i = 0; i < s; ++i) t[i] = gauss(rng);
    const auto pe = partition_eval(x, t);
    const double h = 1e-5;
    for (std::size_t i = 0; i < s; ++i) {
      Eigen::VectorXd tp = t, tm = t;
      tp[i] += h;
      tm[i] -= h;
      const double fd = (log_z(x, tp) - log_z(x, tm)) / (2 * h);
      r.require(std::abs(fd - pe.gradient[i]) <= kFdRelTol * std::max(1.0, std::abs(fd)), "gradient check");
      const Eigen::VectorXd col = (partition_eval(x, tp).gradient - partition_eval(x, tm).gradient) / (2 * h);
      for (std::size_t k = 0; k < s; ++k)
        r.require(std::abs(col[k] - pe.hessian(k, i)) <= kFdRelTol * std::max(1.0, std::abs(col[k])), "hessian check");
    }
  }

  // Entropy of p* against random feasible perturbations.
  int trials = 0;
  for (int n = 0; n < 4 && r.ok; ++n) {
    const VectorSet x = oracle::random_coplanar(rng, 2, 4);
    const std::size_t m = x.size();
    const Eigen::MatrixXd mm = generator_matrix(x);
    Eigen::VectorXd w = Eigen::VectorXd::NullaryExpr(m, [&] { return 0.2 + std::abs(gauss(rng)); });
    w /= w.sum();
    GibbsOptions o;
    o.gauge = Gauge::Standard;
    const auto sol = solve_gibbs(x, mm * w, o);
    r.require(std::abs(std::exp(partition_eval(x, sol.t).logZ) - 1.0) <= kGaugeTol, "standard gauge Z != 1");
    Eigen::MatrixXd a(x.dim() + 1, m);
    a.topRows(x.dim()) = mm;
    a.row(x.dim()).setOnes();
    const Eigen::MatrixXd ker = Eigen::FullPivLU<Eigen::MatrixXd>(a).kernel();
    std::uniform_real_distribution<double> step(1e-4, 1e-1);
    for (int k = 0, kept = 0; kept < 2500 && k < 100000; ++k) {
      Eigen::VectorXd d = ker * Eigen::VectorXd::NullaryExpr(ker.cols(), [&] { return gauss(rng); });
      d *= step(rng) / d.norm();
      const Eigen::VectorXd q = sol.p_star + d;
      if (q.minCoeff() <= 0) continue;
      ++kept;
      ++trials;
      r.require(shannon_entropy(q) <= sol.entropy + 1e-12, "a perturbation beats p*");
    }
  }
  r.require(trials == 10000, "only " + std::to_string(trials) + " feasible perturbations");
  if (r.ok) r.detail = std::to_string(trials) + " feasible perturbations";
  return r;
}

Outcome one_dimensional() {
  Outcome r;
  const double expect = std::log(oracle::plastic_number());
  const double got = *gamma_empirical(validate({{2}, {3}}, 1), {1.0}, 200).gamma_empirical;
  r.require(std::abs(got - expect) <= kOneDimTol, "off by " + num(got - expect));
  if (r.ok) r.detail = "gap " + num(std::abs(got - expect));
  return r;
}

Outcome rigidity() {
  Outcome r;
  const VectorSet x = validate(kOrthant, 2);
  const VectorSet y = validate(iterate(x, 2).expanded(), 2);
  const auto eq = same_growth(x, y);
  r.require(eq.equivalent && eq.witness == WitnessKind::Pairing, "second iteration not equivalent");
  r.require(eq.x_iterate && eq.y_iterate && permutation_equal(eq.x_iterate->expanded(), eq.y_iterate->expanded()),
            "pairing not verified");

  // One vector of the iterate changed, keeping it coplanar.
  try {
    const auto ne = same_growth(x, validate({{2, 0}, {1, 1}, {0, 2}, {0, 2}}, 2));
    r.require(!ne.equivalent && ne.witness == WitnessKind::RefutingDirection && ne.theta &&
                  std::abs(*ne.gamma_x - *ne.gamma_y) > 1e-8,
              "perturbed set not refuted");
  } catch (const Error& e) {
    r.require(false, std::string("perturbed set: ") + e.what());
  }

  std::mt19937_64 rng(909);
  for (int n = 0; n < 10; ++n) {
    const VectorSet base = oracle::random_coplanar(rng, 2 + n % 2, 3);
    const IntMatrix t = oracle::random_unimodular(rng, base.dim(), 6);
    const VectorSet tx = transform_set(base, t);
    r.require(transform_eta(t, *base.coplanarity().eta) == *tx.coplanarity().eta, "transformed eta");
    Eigen::MatrixXd te(base.dim(), base.dim());
    for (std::size_t i = 0; i < base.dim(); ++i)
      for (std::size_t k = 0; k < base.dim(); ++k) te(i, k) = static_cast<double>(t[i][k]);
    for (const auto& th : interior_directions(tx, 4)) {
      const Eigen::VectorXd u = te.partialPivLu().solve(Eigen::Map<const Eigen::VectorXd>(th.data(), th.size()));
      std::vector<double> dir(u.data(), u.data() + u.size());
      for (auto& e : dir) e /= u.norm();
      const double gap = std::abs(gamma_closed(tx, th) - u.norm() * gamma_closed(base, dir));
      r.require(gap <= kTransformTol, "transform law gap " + num(gap));
    }
  }
  return r;
}

Outcome variation() {
  Outcome r;
  std::mt19937_64 rng(1010);
  int pairs = 0;
  for (int n = 0; n < 8; ++n) {
    const VectorSet x = oracle::random_set(rng, 2, 2 + n % 3, 0, 3);
    MultiplicityTable t(x);
    for_each_point(IntVector{0, 0}, IntVector{7, 7}, [&](const IntVector& a) {
      const BigInt ma = t.multiplicity(a);
      if (ma == 0) return;
      for_each_point(IntVector{0, 0}, IntVector{7, 7}, [&](const IntVector& b) {
        const BigInt mb = t.multiplicity(b);
        if (mb == 0) return;
        ++pairs;
        r.require(t.multiplicity(add(a, b)) >= ma * mb, "super-multiplicativity at " + format(a) + " + " + format(b));
      });
    });
  }

  // Bounded Hausdorff variation of A(z): far shell against near shell.
  const VectorSet h = validate({{3}, {5}, {7}}, 1);
  auto shell = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t best = 0;
    for (std::int64_t z = lo; z <= hi; ++z)
      for (std::int64_t d = 1; d <= 3; ++d)
        if (in_semigroup(h, {z}) && in_semigroup(h, {z + d}))
          best = std::max(best, hausdorff_A(h, {z}, {z + d}).squared);
    return std::sqrt(static_cast<double>(best));
  };
  r.require(shell(40, 50) <= 2.0 * shell(10, 20), "Hausdorff distance grows");

  // Polynomial variation: kappa fitted on small norms holds on larger ones.
  const VectorSet p = validate({{2, 0}, {1, 1}, {0, 2}, {1, 2}}, 2);
  MultiplicityTable tp(p);
  const std::vector<IntVector> steps{{1, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 1}};
  auto kappa = [&](std::int64_t lo, std::int64_t hi) {
    double k = 0.0;
    for_each_point(IntVector{lo, lo}, IntVector{hi, hi}, [&](const IntVector& z) {
      const BigInt mz = tp.multiplicity(z);
      if (mz == 0) return;
      for (const auto& d : steps) {
        const BigInt mw = tp.multiplicity(add(z, d));
        if (mw != 0)
          k = std::max(k, std::abs(log_bigint(mz) - log_bigint(mw)) /
                              std::log(2.0 + std::hypot(double(z[0]), double(z[1]))));
      }
    });
    return k;
  };
  const double fitted = kappa(4, 12);
  const double large = kappa(30, 45);
  r.require(large <= fitted, "variation exceeds fitted kappa");
  if (r.ok) r.detail = std::to_string(pairs) + " pairs, kappa " + num(fitted) + " vs " + num(large);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria{
      {"frobenius set of the worked examples", frobenius_examples, 1},
      {"lattice and semigroup membership on [0,20]^2", lattice_and_semigroup, 1},
      {"binomial multiplicities up to 30", binomials, 1},
      {"recurrence equals factorial formula on 50 instances", formula_vs_recurrence, 30},
      {"closed-form growth values and normalized peak", closed_form_values, 1},
      {"empirical growth within slack of the closed form", empirical_vs_closed, 300},
      {"maxent derivatives, optimality and standard gauge", maxent_checks, 30},
      {"one-dimensional growth against the plastic number", one_dimensional, 5},
      {"rigidity verdicts and transform law", rigidity, 30},
      {"super-multiplicativity and bounded variation", variation, 60},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].budget_s) {
      if (o.ok) o.detail = "over time budget";
      o.ok = false;
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
