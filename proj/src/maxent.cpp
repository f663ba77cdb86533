#include "frobnd/maxent.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "frobnd/exact_lp.hpp"

namespace frobnd {
namespace {

// Orthonormal basis (columns) of span{X_j - X_1}.
Eigen::MatrixXd difference_basis(const VectorSet& x) {
  const std::size_t s = x.dim();
  std::vector<IntVector> diffs;
  for (std::size_t j = 1; j < x.size(); ++j) diffs.push_back(sub(x[j], x[0]));
  const std::size_t r = diffs.empty() ? 0 : rank(diffs, s);
  if (r == 0) return Eigen::MatrixXd(static_cast<Eigen::Index>(s), 0);
  Eigen::MatrixXd d(s, diffs.size());
  for (std::size_t c = 0; c < diffs.size(); ++c)
    for (std::size_t i = 0; i < s; ++i) d(i, c) = static_cast<double>(diffs[c][i]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d);
  Eigen::MatrixXd q = qr.householderQ();
  return q.leftCols(static_cast<Eigen::Index>(r));
}

Eigen::VectorXd to_eigen(const IntVector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = static_cast<double>(v[i]);
  return out;
}

}  // namespace

const char* to_string(Gauge gauge) {
  switch (gauge) {
    case Gauge::None: return "none";
    case Gauge::LastCoordinateZero: return "last-coordinate-zero";
    case Gauge::Standard: return "standard";
  }
  return "unknown";
}

Eigen::MatrixXd generator_matrix(const VectorSet& x) {
  Eigen::MatrixXd m(x.dim(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) m.col(j) = to_eigen(x[j]);
  return m;
}

PartitionEvaluation partition_eval(const VectorSet& x, const Eigen::VectorXd& t) {
  if (static_cast<std::size_t>(t.size()) != x.dim()) throw Error(ErrorKind::InvalidArgument, "t has wrong dimension");
  const Eigen::MatrixXd m = generator_matrix(x);
  const Eigen::VectorXd v = m.transpose() * t;
  const double top = v.maxCoeff();
  const Eigen::VectorXd w = (v.array() - top).exp().matrix();
  const double sum = w.sum();
  PartitionEvaluation out;
  out.logZ = top + std::log(sum);
  out.p = w / sum;
  out.gradient = m * out.p;
  out.hessian = m * out.p.asDiagonal() * m.transpose() - out.gradient * out.gradient.transpose();
  return out;
}

double shannon_entropy(const Eigen::VectorXd& p) {
  double h = 0.0;
  for (Eigen::Index j = 0; j < p.size(); ++j)
    if (p(j) > 0) h -= p(j) * std::log(p(j));
  return h;
}

bool beta_interior(const VectorSet& x, const Eigen::VectorXd& beta, double margin) {
  const std::size_t s = x.dim();
  const std::size_t m = x.size();
  // Rows of [M; 1^T], keeping an independent subset so that a rounded beta
  // cannot make the system inconsistent.
  std::vector<IntVector> rows{IntVector(m, 1)};
  std::vector<Rational> rhs{Rational(1)};
  for (std::size_t i = 0; i < s; ++i) {
    IntVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = x[j][i];
    rows.push_back(row);
    if (rank(rows, m) < rows.size()) {
      rows.pop_back();
      continue;
    }
    rhs.emplace_back(beta(static_cast<Eigen::Index>(i)));
  }
  const Rational eps(margin);
  RationalMatrix a = RationalMatrix::from_rows(rows, m);
  RationalVector b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational total = 0;
    for (auto e : rows[r]) total += e;
    b[r] = rhs[r] - eps * total;
  }
  return feasible_point(a, b).has_value();
}

GibbsSolution solve_gibbs(const VectorSet& x, const Eigen::VectorXd& beta, const GibbsOptions& options) {
  const std::size_t s = x.dim();
  if (static_cast<std::size_t>(beta.size()) != s) throw Error(ErrorKind::InvalidArgument, "beta has wrong dimension");
  const Eigen::MatrixXd q = difference_basis(x);
  const Eigen::VectorXd x1 = to_eigen(x[0]);
  const Eigen::VectorXd target = x1 + q * (q.transpose() * (beta - x1));
  if ((target - beta).norm() > 1e-9 * (1.0 + beta.norm()))
    throw Error(ErrorKind::BetaNotInterior, "beta is off the affine hull of X");
  if (!beta_interior(x, target, options.interior_margin))
    throw Error(ErrorKind::BetaNotInterior, "beta is not in the interior of the convex hull of X");

  Eigen::VectorXd y = options.start ? Eigen::VectorXd(q.transpose() * *options.start) : Eigen::VectorXd::Zero(q.cols());
  const double tol = options.tolerance * (1.0 + beta.norm());
  GibbsSolution sol;
  for (int it = 0;; ++it) {
    const PartitionEvaluation ev = partition_eval(x, q * y);
    const Eigen::VectorXd f = q.transpose() * (ev.gradient - target);
    const double res = (ev.gradient - target).norm();
    if (res <= tol) {
      sol.iterations = it;
      sol.residual = res;
      break;
    }
    if (it >= options.max_iterations)
      throw Error(ErrorKind::NoConvergence, "Newton stopped after " + std::to_string(it) +
                                                " iterations with residual " + std::to_string(res));
    // Backtrack on the convex dual logZ(t) - <t, beta>, whose gradient is f.
    // Unlike |f|^2 it has no flat valleys, so the damped step always makes
    // progress.
    const Eigen::MatrixXd jac = q.transpose() * ev.hessian * q;
    const Eigen::VectorXd d = jac.ldlt().solve(-f);
    const double phi0 = ev.logZ - (q * y).dot(target);
    const double slope = f.dot(d);
    double step = 1.0;
    Eigen::VectorXd next = y + d;
    while (step > 1e-12) {
      next = y + step * d;
      const double phi1 = partition_eval(x, q * next).logZ - (q * next).dot(target);
      // The allowance keeps round-off in phi from rejecting steps near the root.
      const double noise = 64 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(phi0));
      if (std::isfinite(phi1) && phi1 <= phi0 + 1e-4 * step * slope + noise) break;
      step *= 0.5;
    }
    y = next;
  }

  Eigen::VectorXd t = q * y;
  const auto& cop = x.coplanarity();
  if (cop.coplanar()) {
    const std::vector<double> eta_d = cop.eta_double();
    const Eigen::VectorXd eta = Eigen::Map<const Eigen::VectorXd>(eta_d.data(), static_cast<Eigen::Index>(s));
    switch (options.gauge) {
      case Gauge::None: break;
      case Gauge::Standard: t -= partition_eval(x, t).logZ * eta; break;
      case Gauge::LastCoordinateZero:
        if (cop.eta->back() == 0) throw Error(ErrorKind::GaugeUnavailable, "last coordinate of eta is zero");
        t += (-t(static_cast<Eigen::Index>(s - 1)) / eta(static_cast<Eigen::Index>(s - 1))) * eta;
        break;
    }
    sol.gauge = options.gauge;
  }
  const PartitionEvaluation ev = partition_eval(x, t);
  sol.beta = target;
  sol.t = t;
  sol.p_star = ev.p;
  sol.logZ = ev.logZ;
  sol.entropy = ev.logZ - t.dot(target);
  return sol;
}

double max_entropy_constrained(const VectorSet& x, const Eigen::VectorXd& beta) {
  return solve_gibbs(x, beta).entropy;
}

}  // namespace frobnd
