#include "frobnd/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frobnd {
namespace {

double unit_dot(const IntVector& n, const std::vector<double>& x) {
  double d = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) d += static_cast<double>(n[i]) * x[i];
  return d / std::sqrt(static_cast<double>(norm_sq(n)));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
  return d;
}

void check_unit(const VectorSet& x, const std::vector<double>& theta) {
  if (theta.size() != x.dim()) throw Error(ErrorKind::InvalidArgument, "direction has wrong dimension");
  if (std::abs(std::sqrt(dot(theta, theta)) - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidArgument, "direction is not a unit vector");
}

double halton(std::uint64_t index, std::uint64_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

std::vector<double> direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

double normalized_closed(const VectorSet& x, double angle) {
  const auto theta = direction(angle);
  const auto eta = x.coplanarity().eta_double();
  return gamma_closed(x, theta) / dot(theta, eta);
}

}  // namespace

double empirical_slack(int k_max) { return 8.0 * std::log(static_cast<double>(k_max)) / k_max + 0.02; }

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

ClosedFormGamma gamma_closed_detail(const VectorSet& x, const std::vector<double>& theta, Gauge gauge) {
  if (!x.coplanarity().coplanar()) throw Error(ErrorKind::NotCoplanar, "no eta with <eta, X_j> = 1 for all j");
  check_unit(x, theta);
  if (!x.cone().contains_interior(theta, 1e-12))
    throw Error(ErrorKind::BetaNotInterior, "direction is not in the interior of the cone");
  const auto eta = x.coplanarity().eta_double();
  const double scale = dot(theta, eta);
  Eigen::VectorXd beta(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) beta(static_cast<Eigen::Index>(i)) = theta[i] / scale;
  GibbsOptions opts;
  opts.gauge = gauge;
  ClosedFormGamma out;
  out.gibbs = solve_gibbs(x, beta, opts);
  double t_theta = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) t_theta += out.gibbs.t(static_cast<Eigen::Index>(i)) * theta[i];
  out.entropy_form = scale * out.gibbs.entropy;
  out.partition_form = scale * out.gibbs.logZ - t_theta;
  if (std::abs(out.entropy_form - out.partition_form) > 1e-9)
    throw Error(ErrorKind::NoConvergence, "entropy and partition forms disagree");
  out.gamma = out.entropy_form;
  return out;
}

double gamma_closed(const VectorSet& x, const std::vector<double>& theta) {
  return gamma_closed_detail(x, theta).gamma;
}

MultiplicityTable growth_table(const VectorSet& x, const std::vector<std::vector<double>>& thetas, int k_max) {
  if (thetas.empty()) return MultiplicityTable(x);
  const double r0 = std::sqrt(static_cast<double>(zonotope_diameter_squared(x)));
  const auto& hs = x.cone().halfspaces;
  std::vector<Rational> upper;
  for (const auto& h : hs) {
    const double hn = std::sqrt(static_cast<double>(norm_sq(h)));
    double top = 0.0;
    for (const auto& th : thetas) top = std::max(top, k_max * unit_dot(h, th) * hn);
    upper.emplace_back(static_cast<std::int64_t>(std::ceil(top + r0 * hn)) + 1);
  }
  return MultiplicityTable::covering(x, upper);
}

GrowthEstimate gamma_empirical(MultiplicityTable& table, const std::vector<double>& theta, int k_max) {
  const VectorSet& x = table.vectors();
  if (k_max < 8) throw Error(ErrorKind::HorizonTooSmall, "k_max must be at least 8");
  check_unit(x, theta);
  if (!x.cone().contains(theta, 1e-12)) throw Error(ErrorKind::InvalidArgument, "direction is outside the cone");
  std::vector<IntVector> face;
  for (const auto& h : x.cone().halfspaces)
    if (unit_dot(h, theta) <= 1e-12) face.push_back(h);
  const double r0 = std::sqrt(static_cast<double>(zonotope_diameter_squared(x)));

  GrowthEstimate est;
  est.theta = theta;
  est.k_max = k_max;
  std::vector<double> ks, ys;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<double> target(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) target[i] = k * theta[i];
    const NearestPoint np = nearest_point(table, target, r0, face);
    est.samples.push_back({k, np.z, log_bigint(np.m)});
    if (2 * k > k_max) {
      ks.push_back(k);
      ys.push_back(est.samples.back().log_m);
    }
  }
  const LinearFit fit = least_squares(ks, ys);
  est.gamma_empirical = fit.slope;
  est.residual = fit.rms;
  return est;
}

GrowthEstimate gamma_empirical(const VectorSet& x, const std::vector<double>& theta, int k_max) {
  if (k_max < 8) throw Error(ErrorKind::HorizonTooSmall, "k_max must be at least 8");
  check_unit(x, theta);
  MultiplicityTable table = growth_table(x, {theta}, k_max);
  return gamma_empirical(table, theta, k_max);
}

std::vector<std::vector<double>> interior_directions(const VectorSet& x, int count, int skip) {
  const auto& rays = x.cone().extreme_rays;
  if (rays.size() > std::size(kPrimes)) throw Error(ErrorKind::InvalidArgument, "too many extreme rays");
  std::vector<std::vector<double>> out;
  for (int i = 0; i < count; ++i) {
    const auto index = static_cast<std::uint64_t>(skip + i + 1);
    std::vector<double> v(x.dim(), 0.0);
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const double w = 0.05 + 0.9 * halton(index, kPrimes[r]);
      const double len = std::sqrt(static_cast<double>(norm_sq(rays[r])));
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += w * rays[r][k] / len;
    }
    const double n = std::sqrt(dot(v, v));
    for (auto& e : v) e /= n;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<double> sweep_angles(const VectorSet& x, int resolution) {
  if (x.dim() != 2) throw Error(ErrorKind::InvalidArgument, "angular sweep needs s = 2");
  if (resolution < 1) throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  const auto& rays = x.cone().extreme_rays;
  double a = std::atan2(static_cast<double>(rays[0][1]), static_cast<double>(rays[0][0]));
  double b = std::atan2(static_cast<double>(rays[1][1]), static_cast<double>(rays[1][0]));
  double width = std::remainder(b - a, 2.0 * M_PI);
  if (width < 0) {
    std::swap(a, b);
    width = -width;
  }
  std::vector<double> out;
  for (int i = 1; i <= resolution; ++i) out.push_back(std::remainder(a + width * i / (resolution + 1), 2.0 * M_PI));
  return out;
}

std::vector<CurvePoint> gamma_curve(const VectorSet& x, const std::vector<std::vector<double>>& directions,
                                    const CurveOptions& options) {
  CurveMode mode = options.mode;
  if (mode == CurveMode::Auto) mode = x.coplanarity().coplanar() ? CurveMode::Closed : CurveMode::Empirical;
  const bool closed = mode == CurveMode::Closed || mode == CurveMode::Both;
  const bool empirical = mode == CurveMode::Empirical || mode == CurveMode::Both;
  if (closed && !x.coplanarity().coplanar())
    throw Error(ErrorKind::NotCoplanar, "closed form needs coplanar generators");
  if (empirical && options.k_max < 8) throw Error(ErrorKind::HorizonTooSmall, "k_max must be at least 8");

  std::optional<MultiplicityTable> table;
  if (empirical) table.emplace(growth_table(x, directions, options.k_max));
  std::vector<CurvePoint> out;
  for (const auto& theta : directions) {
    CurvePoint pt;
    pt.theta = theta;
    if (x.dim() == 2) pt.angle = std::atan2(theta[1], theta[0]);
    if (closed) pt.closed = gamma_closed(x, theta);
    if (empirical) {
      const GrowthEstimate est = gamma_empirical(*table, theta, options.k_max);
      pt.empirical = est.gamma_empirical;
      pt.residual = est.residual;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<CurvePoint> gamma_curve(const VectorSet& x, int resolution, const CurveOptions& options) {
  std::vector<std::vector<double>> dirs;
  if (x.dim() == 1) {
    dirs.push_back({x.cone().extreme_rays[0][0] > 0 ? 1.0 : -1.0});
  } else if (x.dim() == 2) {
    for (double a : sweep_angles(x, resolution)) dirs.push_back(direction(a));
  } else {
    dirs = interior_directions(x, resolution);
  }
  auto pts = gamma_curve(x, dirs, options);
  if (x.dim() == 2) {
    const auto angles = sweep_angles(x, resolution);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].angle = angles[i];
  }
  return pts;
}

PeakLocation normalized_gamma_peak(const VectorSet& x, int resolution) {
  if (!x.coplanarity().coplanar()) throw Error(ErrorKind::NotCoplanar, "closed form needs coplanar generators");
  const auto angles = sweep_angles(x, resolution);
  const double step = resolution > 1 ? std::remainder(angles[1] - angles[0], 2.0 * M_PI) : 0.0;
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double v = normalized_closed(x, angles[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  PeakLocation peak;
  peak.grid_angle = angles[best];
  peak.grid_step = std::abs(step);
  // Bracket between the grid neighbours; the outer ends are the cone's rays.
  const double half = resolution > 1 ? std::abs(step) : 0.0;
  double lo = angles[best] - (best == 0 ? half * (1 - 1e-9) : half);
  double hi = angles[best] + (best + 1 == angles.size() ? half * (1 - 1e-9) : half);
  if (step < 0) std::swap(lo, hi);
  if (resolution > 1) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo), d = lo + ratio * (hi - lo);
    double fc = normalized_closed(x, c), fd = normalized_closed(x, d);
    while (std::abs(hi - lo) > 1e-12) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - ratio * (hi - lo);
        fc = normalized_closed(x, c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + ratio * (hi - lo);
        fd = normalized_closed(x, d);
      }
    }
    peak.angle = 0.5 * (lo + hi);
  } else {
    peak.angle = angles[best];
  }
  peak.theta = direction(peak.angle);
  peak.value = normalized_closed(x, peak.angle);
  return peak;
}

SubadditiveLimit subadditive_limit(const std::vector<double>& b, double c) {
  if (b.size() < 16) throw Error(ErrorKind::InvalidArgument, "sequence needs at least 16 terms");
  SubadditiveLimit out;
  out.certified_lower_bound = -std::numeric_limits<double>::infinity();
  std::vector<double> ns, ys;
  const std::size_t n = b.size();
  for (std::size_t m = 1; m <= n; ++m) {
    const double bound = (b[m - 1] - c * std::log(4.0 * static_cast<double>(m))) / static_cast<double>(m);
    if (bound > out.certified_lower_bound) {
      out.certified_lower_bound = bound;
      out.best_m = static_cast<int>(m);
    }
    if (2 * m > n) {
      ns.push_back(static_cast<double>(m));
      ys.push_back(b[m - 1]);
    }
  }
  out.estimate = std::max(least_squares(ns, ys).slope, out.certified_lower_bound);
  return out;
}

}  // namespace frobnd
