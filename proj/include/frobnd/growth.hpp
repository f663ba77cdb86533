#ifndef FROBND_GROWTH_HPP
#define FROBND_GROWTH_HPP

#include <optional>
#include <vector>

#include "frobnd/maxent.hpp"
#include "frobnd/multiplicity.hpp"

namespace frobnd {

struct GrowthSample {
  int k = 0;
  IntVector z;  // nearest J-point to k*theta
  double log_m = 0.0;
};

struct GrowthEstimate {
  std::vector<double> theta;
  std::optional<double> gamma_empirical;
  std::optional<double> gamma_closed;
  int k_max = 0;
  std::vector<GrowthSample> samples;
  double residual = 0.0;  // rms residual of the slope fit
};

struct ClosedFormGamma {
  double gamma = 0.0;
  double entropy_form = 0.0;    // <theta,eta> * max entropy at beta
  double partition_form = 0.0;  // <theta,eta> log Z(t) - <t,theta>
  GibbsSolution gibbs;
};

/// Closed-form growth rate for eta-coplanar X and unit interior theta.
/// Throws NotCoplanar or BetaNotInterior.
ClosedFormGamma gamma_closed_detail(const VectorSet& x, const std::vector<double>& theta,
                                    Gauge gauge = Gauge::Standard);
double gamma_closed(const VectorSet& x, const std::vector<double>& theta);

/// Slope of log m(z_k) against k over the upper half of 1..k_max. Directions
/// on a proper face only see lattice points of that face.
GrowthEstimate gamma_empirical(MultiplicityTable& table, const std::vector<double>& theta, int k_max);
GrowthEstimate gamma_empirical(const VectorSet& x, const std::vector<double>& theta, int k_max);

/// Table whose box covers every path to the points used by gamma_empirical.
MultiplicityTable growth_table(const VectorSet& x, const std::vector<std::vector<double>>& thetas, int k_max);

/// 8 log(k_max)/k_max + 0.02
double empirical_slack(int k_max);

enum class CurveMode { Auto, Closed, Empirical, Both };

struct CurveOptions {
  CurveMode mode = CurveMode::Auto;
  int k_max = 200;
};

struct CurvePoint {
  std::optional<double> angle;  // s = 2 only
  std::vector<double> theta;
  std::optional<double> closed;
  std::optional<double> empirical;
  std::optional<double> residual;
};

/// s = 2: `resolution` angles strictly inside the cone, evenly spaced.
/// s = 1: the single direction. s >= 3: quasi-random interior directions.
std::vector<CurvePoint> gamma_curve(const VectorSet& x, int resolution, const CurveOptions& options = {});
std::vector<CurvePoint> gamma_curve(const VectorSet& x, const std::vector<std::vector<double>>& directions,
                                    const CurveOptions& options = {});

/// Unit interior directions from Halton weights on the extreme rays.
std::vector<std::vector<double>> interior_directions(const VectorSet& x, int count, int skip = 0);

/// Interior angles used by gamma_curve for s = 2.
std::vector<double> sweep_angles(const VectorSet& x, int resolution);

struct PeakLocation {
  double grid_angle = 0.0;     // best grid angle
  double angle = 0.0;          // refined by golden-section search
  std::vector<double> theta;
  double value = 0.0;          // gamma / <eta, theta> at the refined angle
  double grid_step = 0.0;
};

/// Maximum of gamma(theta)/<eta,theta> over the s = 2 sweep, refined between
/// the neighbours of the best grid angle.
PeakLocation normalized_gamma_peak(const VectorSet& x, int resolution);

struct SubadditiveLimit {
  double estimate = 0.0;
  double certified_lower_bound = 0.0;
  int best_m = 0;
};

/// b[n-1] = b_n for n = 1..N with b_n + b_m <= b_{n+m} + c log(n+m).
SubadditiveLimit subadditive_limit(const std::vector<double>& b, double c);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace frobnd

#endif  // FROBND_GROWTH_HPP
