#ifndef FROBND_RIGIDITY_HPP
#define FROBND_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobnd/growth.hpp"

namespace frobnd {

/// Multiset of all p-step walk endpoints X_{i_1} + ... + X_{i_p}.
struct IteratedSet {
  std::size_t p = 1;
  std::vector<std::pair<IntVector, std::uint64_t>> multiset;  // sorted, with multiplicity

  std::uint64_t total() const;
  /// The multiset as a sorted list with repeats.
  std::vector<IntVector> expanded() const;
};

constexpr std::uint64_t kDefaultIterationCap = 1000000;

/// Throws IterationTooLarge when m^p exceeds the cap.
IteratedSet iterate(const VectorSet& x, std::size_t p, std::uint64_t cap = kDefaultIterationCap);

bool permutation_equal(std::vector<IntVector> a, std::vector<IntVector> b);
bool permutation_equal(const IteratedSet& a, const IteratedSet& b);

enum class WitnessKind { Pairing, ConeMismatch, RefutingDirection, MultisetMismatch };

const char* to_string(WitnessKind kind);

struct RigidityNotes {
  bool cones_equal = false;
  bool eta_parallel = false;
  std::optional<RationalVector> eta_x, eta_y;
  int probes = 0;
  std::optional<double> max_gamma_gap;        // over the cross-check directions
  std::optional<double> max_standard_t_gap;   // standard-gauge parameters, componentwise
  std::vector<std::string> messages;
};

struct RigidityVerdict {
  bool equivalent = false;
  std::optional<Rational> c;  // eta_x = c * eta_y, c = q / p
  WitnessKind witness = WitnessKind::MultisetMismatch;
  std::uint64_t q = 0, p = 0;
  std::optional<IteratedSet> x_iterate, y_iterate;
  std::optional<std::vector<double>> theta;  // refuting direction
  std::optional<double> gamma_x, gamma_y;
  RigidityNotes notes;
};

struct RigidityOptions {
  double tolerance = 1e-8;
  std::uint64_t iteration_cap = kDefaultIterationCap;
  int sample_budget = 256;
  int cross_checks = 16;
};

/// Decides whether two coplanar sets have the same growth function. The
/// decision is the exact multiset comparison of X^(q) and Y^(p); numerics only
/// supply refuting directions and cross-checks. Throws NotCoplanar,
/// IterationTooLarge or InconclusiveSampling.
RigidityVerdict same_growth(const VectorSet& x, const VectorSet& y, const RigidityOptions& options = {});

using IntMatrix = std::vector<IntVector>;  // rows

/// T X_j for every j, revalidated. Throws SingularTransform.
VectorSet transform_set(const VectorSet& x, const IntMatrix& t);

/// (T^T)^{-1} eta
RationalVector transform_eta(const IntMatrix& t, const RationalVector& eta);

/// Identity with last column (-a_1, ..., -a_{s-1}, 1); a = (a_1, ..., a_{s-1}).
IntMatrix shear_matrix(const IntVector& a);

}  // namespace frobnd

#endif  // FROBND_RIGIDITY_HPP
