#ifndef FROBND_VECSET_HPP
#define FROBND_VECSET_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "frobnd/rational_linalg.hpp"
#include "frobnd/types.hpp"

namespace frobnd {

/// Basis of the lattice X_1 Z + ... + X_m Z. Row i has support in columns
/// 0..i and a positive diagonal entry; off-diagonal entries below a pivot are
/// reduced into [0, pivot).
struct LatticeBasis {
  std::vector<IntVector> basis;
  BigInt determinant;

  bool contains(const IntVector& z) const;

  /// Integer coordinates of z in the basis, when z is in the lattice.
  std::optional<IntVector> coordinates(const IntVector& z) const;
};

/// Facet/ray description of the cone C_X = X_1 R+ + ... + X_m R+.
struct ConeGeometry {
  std::size_t dim = 0;
  std::vector<IntVector> extreme_rays;   // primitive, sorted
  std::vector<IntVector> facet_normals;  // primitive, inward, sorted; empty when s = 1
  std::vector<std::vector<std::size_t>> faces2;

  /// Normals of the half-spaces whose intersection is the cone. Equals
  /// facet_normals except for s = 1, where it holds the single ray.
  std::vector<IntVector> halfspaces;

  bool contains(const IntVector& z) const;
  bool contains(const std::vector<double>& x, double tol = 1e-12) const;
  /// Strict interior test with a margin on the unit-normal distances.
  bool contains_interior(const std::vector<double>& x, double margin = 1e-12) const;
};

/// eta with <eta, X_j> = 1 for all j, or nullopt when no such hyperplane exists.
struct CoplanarityCertificate {
  std::optional<RationalVector> eta;

  bool coplanar() const { return eta.has_value(); }
  std::vector<double> eta_double() const;
};

/// The defining multiset X = {X_1, ..., X_m} in Z^s together with the derived
/// geometry. Construct through validate(); immutable afterwards.
class VectorSet {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<IntVector>& vectors() const { return vectors_; }
  const IntVector& operator[](std::size_t j) const { return vectors_[j]; }

  /// Distinct generators in sorted order (J and Omega do not see duplicates).
  const std::vector<IntVector>& distinct() const { return distinct_; }

  const RationalVector& alpha() const { return alpha_; }
  /// alpha scaled to a primitive integer vector; same half-space.
  const IntVector& alpha_integer() const { return alpha_int_; }
  /// min_j <X_j, alpha> / |alpha|.
  double delta() const { return delta_; }

  const LatticeBasis& lattice() const { return geometry_->lattice; }
  const ConeGeometry& cone() const { return geometry_->cone; }
  const CoplanarityCertificate& coplanarity() const { return geometry_->coplanarity; }

 private:
  friend VectorSet validate(const std::vector<IntVector>& vectors, std::size_t dim);

  struct Geometry {
    LatticeBasis lattice;
    ConeGeometry cone;
    CoplanarityCertificate coplanarity;
  };

  std::size_t dim_ = 0;
  std::vector<IntVector> vectors_;
  std::vector<IntVector> distinct_;
  RationalVector alpha_;
  IntVector alpha_int_;
  double delta_ = 0.0;
  std::shared_ptr<const Geometry> geometry_;
};

/// Checks the defining data and computes the half-space certificate alpha
/// (minimal l1-norm solution of <X_j, alpha> >= 1) plus lattice, cone and
/// coplanarity data. Throws Error with InvalidArgument, ZeroVector,
/// NoHalfSpace or NotFullRank.
VectorSet validate(const std::vector<IntVector>& vectors, std::size_t dim);

LatticeBasis lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim);
inline LatticeBasis lattice_basis(const VectorSet& x) { return lattice_basis(x.vectors(), x.dim()); }

bool in_lattice(const LatticeBasis& lattice, const IntVector& z);

ConeGeometry cone_geometry(const std::vector<IntVector>& vectors, std::size_t dim);
inline ConeGeometry cone_geometry(const VectorSet& x) { return cone_geometry(x.vectors(), x.dim()); }

/// Integer bounding box [lo, hi] of {x : 0 <= <h_i, x> <= upper_i} over the
/// cone's half-spaces. Bounded because the cone is pointed.
std::pair<IntVector, IntVector> slab_box(const ConeGeometry& cone, const std::vector<Rational>& upper);

CoplanarityCertificate coplanar_normal(const std::vector<IntVector>& vectors, std::size_t dim);
inline CoplanarityCertificate coplanar_normal(const VectorSet& x) { return coplanar_normal(x.vectors(), x.dim()); }

}  // namespace frobnd

#endif  // FROBND_VECSET_HPP
