#ifndef FROBND_MAXENT_HPP
#define FROBND_MAXENT_HPP

#include <optional>

#include <Eigen/Dense>

#include "frobnd/vecset.hpp"

namespace frobnd {

/// Z(t) = sum_j exp<t, X_j> and its derivatives, in log-sum-exp form.
struct PartitionEvaluation {
  double logZ = 0.0;
  Eigen::VectorXd p;         // Gibbs weights exp<t,X_j>/Z(t)
  Eigen::VectorXd gradient;  // A(t) = sum_j p_j X_j
  Eigen::MatrixXd hessian;   // dA(t) = M (diag p - p p^T) M^T
};

PartitionEvaluation partition_eval(const VectorSet& x, const Eigen::VectorXd& t);

/// s x m matrix whose columns are the X_j.
Eigen::MatrixXd generator_matrix(const VectorSet& x);

enum class Gauge { None, LastCoordinateZero, Standard };

const char* to_string(Gauge gauge);

struct GibbsOptions {
  Gauge gauge = Gauge::None;
  std::optional<Eigen::VectorXd> start;
  int max_iterations = 200;
  double tolerance = 1e-10;        // on |A(t) - beta| / (1 + |beta|)
  double interior_margin = 1e-9;   // smallest admissible p_j in the interior test
};

struct GibbsSolution {
  Eigen::VectorXd beta;
  Eigen::VectorXd t;
  Eigen::VectorXd p_star;
  double logZ = 0.0;
  double entropy = 0.0;
  std::optional<Gauge> gauge;  // set only for coplanar X
  int iterations = 0;
  double residual = 0.0;
};

/// Whether beta = sum p_j X_j for a probability vector with every p_j >= margin
/// (exact linear programming).
bool beta_interior(const VectorSet& x, const Eigen::VectorXd& beta, double margin = 1e-9);

/// Solves grad Z(t) / Z(t) = beta by damped Newton on the span of the
/// differences X_j - X_1, then applies the requested gauge.
GibbsSolution solve_gibbs(const VectorSet& x, const Eigen::VectorXd& beta, const GibbsOptions& options = {});

double max_entropy_constrained(const VectorSet& x, const Eigen::VectorXd& beta);

/// Shannon entropy -sum p_j log p_j.
double shannon_entropy(const Eigen::VectorXd& p);

}  // namespace frobnd

#endif  // FROBND_MAXENT_HPP
