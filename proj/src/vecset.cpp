#include "frobnd/vecset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "frobnd/exact_lp.hpp"

namespace frobnd {
namespace {

using BigRow = std::vector<BigInt>;

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::InvalidArgument, "lattice entry exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

// Floor division for BigInt (cpp_int truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntVector integer_direction(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, BigInt(denominator(q)));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(BigInt(numerator(v[i]) * (l / denominator(v[i]))));
  return primitive(out);
}

double unit_dot(const IntVector& n, const std::vector<double>& x) {
  double d = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) d += static_cast<double>(n[i]) * x[i];
  return d / std::sqrt(static_cast<double>(norm_sq(n)));
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool LatticeBasis::contains(const IntVector& z) const { return coordinates(z).has_value(); }

std::optional<IntVector> LatticeBasis::coordinates(const IntVector& z) const {
  const std::size_t s = basis.size();
  IntVector rest = z;
  IntVector coords(s, 0);
  for (std::size_t col = s; col-- > 0;) {
    const std::int64_t d = basis[col][col];
    if (rest[col] % d != 0) return std::nullopt;
    const std::int64_t c = rest[col] / d;
    coords[col] = c;
    if (c != 0)
      for (std::size_t k = 0; k <= col; ++k) rest[k] -= c * basis[col][k];
  }
  return coords;
}

bool in_lattice(const LatticeBasis& lattice, const IntVector& z) { return lattice.contains(z); }

LatticeBasis lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::vector<BigRow> rows;
  for (const auto& v : vectors) {
    BigRow r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = v[i];
    rows.push_back(std::move(r));
  }
  std::vector<BigRow> basis(dim);
  for (std::size_t col = dim; col-- > 0;) {
    // Euclid on column `col` across the remaining rows.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) throw Error(ErrorKind::NotFullRank, "generators do not span R^s");
      bool reduced = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][col] == 0) continue;
        const BigInt q = rows[r][col] / rows[best][col];
        for (std::size_t k = 0; k <= col; ++k) rows[r][k] -= q * rows[best][k];
        reduced = true;
      }
      if (!reduced) {
        BigRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        if (pivot[col] < 0)
          for (auto& e : pivot) e = -e;
        basis[col] = std::move(pivot);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = i; k-- > 0;) {
      const BigInt q = floor_div(basis[i][k], basis[k][k]);
      if (q == 0) continue;
      for (std::size_t c = 0; c <= k; ++c) basis[i][c] -= q * basis[k][c];
    }
  }
  LatticeBasis out;
  out.determinant = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = to_int64(basis[i][c]);
    out.basis.push_back(std::move(row));
    out.determinant *= basis[i][i];
  }
  return out;
}

bool ConeGeometry::contains(const IntVector& z) const {
  for (const auto& h : halfspaces)
    if (dot(h, z) < 0) return false;
  return true;
}

bool ConeGeometry::contains(const std::vector<double>& x, double tol) const {
  for (const auto& h : halfspaces)
    if (unit_dot(h, x) < -tol) return false;
  return true;
}

bool ConeGeometry::contains_interior(const std::vector<double>& x, double margin) const {
  for (const auto& h : halfspaces)
    if (unit_dot(h, x) <= margin) return false;
  return true;
}

ConeGeometry cone_geometry(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::vector<IntVector> distinct = vectors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  ConeGeometry g;
  g.dim = dim;
  if (dim == 1) {
    const IntVector ray{distinct.front()[0] > 0 ? 1 : -1};
    g.extreme_rays = {ray};
    g.halfspaces = {ray};
    return g;
  }

  std::set<IntVector> normals;
  for_each_subset(distinct.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> rows;
    for (auto i : idx) rows.push_back(distinct[i]);
    const auto ns = null_space(RationalMatrix::from_rows(rows, dim));
    if (ns.size() != 1) return;
    IntVector n = integer_direction(ns.front());
    bool pos = false, neg = false;
    for (const auto& d : distinct) {
      const auto v = dot(n, d);
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos && neg) return;
    if (neg) n = scale(n, -1);
    normals.insert(n);
  });
  g.facet_normals.assign(normals.begin(), normals.end());
  g.halfspaces = g.facet_normals;

  std::set<IntVector> rays;
  for (const auto& d : distinct) {
    std::vector<IntVector> tight;
    for (const auto& n : g.facet_normals)
      if (dot(n, d) == 0) tight.push_back(n);
    if (!tight.empty() && rank(tight, dim) == dim - 1) rays.insert(primitive(d));
  }
  g.extreme_rays.assign(rays.begin(), rays.end());

  if (dim == 2) {
    std::vector<std::size_t> all(vectors.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    g.faces2.push_back(std::move(all));
    return g;
  }
  std::set<std::vector<std::size_t>> faces;
  for (std::size_t a = 0; a < g.extreme_rays.size(); ++a) {
    for (std::size_t b = a + 1; b < g.extreme_rays.size(); ++b) {
      std::vector<IntVector> tight;
      for (const auto& n : g.facet_normals)
        if (dot(n, g.extreme_rays[a]) == 0 && dot(n, g.extreme_rays[b]) == 0) tight.push_back(n);
      if (tight.empty() || rank(tight, dim) != dim - 2) continue;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        bool on = true;
        for (const auto& n : tight) on = on && dot(n, vectors[j]) == 0;
        if (on) members.push_back(j);
      }
      faces.insert(std::move(members));
    }
  }
  g.faces2.assign(faces.begin(), faces.end());
  return g;
}

std::pair<IntVector, IntVector> slab_box(const ConeGeometry& cone, const std::vector<Rational>& upper) {
  const std::size_t s = cone.dim;
  const std::size_t f = cone.halfspaces.size();
  // Variables: x+ (s), x- (s), lower slack (f), upper slack (f).
  RationalMatrix a(2 * f, 2 * s + 2 * f);
  RationalVector b(2 * f, Rational(0));
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      a(i, k) = cone.halfspaces[i][k];
      a(i, s + k) = -cone.halfspaces[i][k];
      a(f + i, k) = cone.halfspaces[i][k];
      a(f + i, s + k) = -cone.halfspaces[i][k];
    }
    a(i, 2 * s + i) = -1;
    a(f + i, 2 * s + f + i) = 1;
    b[f + i] = upper[i];
  }
  IntVector lo(s), hi(s);
  for (std::size_t k = 0; k < s; ++k) {
    for (int sign : {1, -1}) {
      RationalVector c(2 * s + 2 * f, Rational(0));
      c[k] = sign;
      c[s + k] = -sign;
      const LpResult r = maximize(a, b, c);
      if (r.status != LpStatus::Optimal) throw Error(ErrorKind::InvalidArgument, "slab region is empty or unbounded");
      const Rational v = r.x[k] - r.x[s + k];
      if (sign > 0) {
        BigInt q = numerator(v) / denominator(v);
        if (Rational(q) < v) ++q;
        hi[k] = to_int64(q);
      } else {
        lo[k] = to_int64(floor_div(numerator(v), denominator(v)));
      }
    }
  }
  return {lo, hi};
}

std::vector<double> CoplanarityCertificate::eta_double() const {
  std::vector<double> out;
  if (eta)
    for (const auto& q : *eta) out.push_back(static_cast<double>(q));
  return out;
}

CoplanarityCertificate coplanar_normal(const std::vector<IntVector>& vectors, std::size_t dim) {
  const RationalMatrix a = RationalMatrix::from_rows(vectors, dim);
  CoplanarityCertificate cert;
  cert.eta = solve(a, RationalVector(vectors.size(), Rational(1)));
  return cert;
}

VectorSet validate(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (vectors.size() < 2) throw Error(ErrorKind::InvalidArgument, "at least two vectors are required");
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim)
      throw Error(ErrorKind::InvalidArgument,
                  "vector " + std::to_string(j) + " has length " + std::to_string(vectors[j].size()) +
                      ", expected " + std::to_string(dim));
    if (is_zero(vectors[j])) throw Error(ErrorKind::ZeroVector, "vector " + std::to_string(j) + " is zero");
  }

  // <X_j, alpha+ - alpha-> - slack_j = 1, minimizing |alpha|_1.
  const std::size_t m = vectors.size();
  RationalMatrix a(m, 2 * dim + m);
  RationalVector b(m, Rational(1));
  RationalVector c(2 * dim + m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      a(j, i) = vectors[j][i];
      a(j, dim + i) = -vectors[j][i];
    }
    a(j, 2 * dim + j) = -1;
  }
  for (std::size_t i = 0; i < 2 * dim; ++i) c[i] = -1;
  const LpResult lp = maximize(a, b, c);
  if (lp.status != LpStatus::Optimal)
    throw Error(ErrorKind::NoHalfSpace, "no alpha with <X_j, alpha> > 0 for all j");

  if (rank(vectors, dim) < dim) throw Error(ErrorKind::NotFullRank, "generators do not span R^s");

  VectorSet x;
  x.dim_ = dim;
  x.vectors_ = vectors;
  x.distinct_ = vectors;
  std::sort(x.distinct_.begin(), x.distinct_.end());
  x.distinct_.erase(std::unique(x.distinct_.begin(), x.distinct_.end()), x.distinct_.end());
  x.alpha_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) x.alpha_[i] = lp.x[i] - lp.x[dim + i];
  x.alpha_int_ = integer_direction(x.alpha_);
  double alpha_norm = 0.0;
  for (const auto& q : x.alpha_) alpha_norm += static_cast<double>(q * q);
  alpha_norm = std::sqrt(alpha_norm);
  x.delta_ = std::numeric_limits<double>::infinity();
  for (const auto& v : vectors) x.delta_ = std::min(x.delta_, static_cast<double>(dot(x.alpha_, v)) / alpha_norm);

  auto geometry = std::make_shared<VectorSet::Geometry>();
  geometry->lattice = lattice_basis(vectors, dim);
  geometry->cone = cone_geometry(vectors, dim);
  geometry->coplanarity = coplanar_normal(vectors, dim);
  x.geometry_ = std::move(geometry);
  return x;
}

}  // namespace frobnd
