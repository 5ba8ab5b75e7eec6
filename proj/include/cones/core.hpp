#pragma once

// Concrete cone families, the order functionals M(x/y), m(x/y), and the
// Hilbert / Thompson / Funk metrics they induce.
//
// Orthant, simplicial and facet-described polyhedral cones evaluate the
// order bounds as max/min ratios of facet functionals; PSD and Lorentz
// cones delegate to the Jordan-algebra route.

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "cones/common.hpp"
#include "cones/jordan.hpp"

namespace cones {

enum class ConeKind { Orthant, Simplicial, PolyhedralFacets, Psd, Lorentz };

class ConeHandle;
using ConePtr = std::shared_ptr<const ConeHandle>;

class ConeHandle {
 public:
  static ConePtr orthant(int n) {
    if (n < 1) throw DimensionMismatch("orthant dimension must be >= 1");
    auto c = std::shared_ptr<ConeHandle>(new ConeHandle());
    c->kind_ = ConeKind::Orthant;
    c->ambient_dim_ = n;
    c->order_dim_ = n;
    return c;
  }

  /// Cone spanned by the columns of `basis`; the facet functionals are the
  /// rows of basis^{-1}, already normalized at the witness u = basis * 1.
  static ConePtr simplicial(const Matrix& basis, double cond_floor = 1e-12) {
    if (basis.rows() != basis.cols() || basis.rows() == 0)
      throw DimensionMismatch("simplicial basis must be square");
    Eigen::JacobiSVD<Matrix> svd(basis);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(smin > cond_floor * smax))
      throw NotInvertible("simplicial basis is singular or too ill-conditioned");
    auto c = std::shared_ptr<ConeHandle>(new ConeHandle());
    c->kind_ = ConeKind::Simplicial;
    c->ambient_dim_ = static_cast<int>(basis.rows());
    c->order_dim_ = c->ambient_dim_;
    c->basis_ = basis;
    c->psi_ = basis.inverse();
    c->witness_ = basis * Vector::Ones(basis.cols());
    return c;
  }

  /// Cone {x : psi_i(x) >= 0}, certified nonempty-interior by `witness`.
  /// Rows are re-normalized so that psi_i(witness) = 1.
  static ConePtr polyhedral(const Matrix& psi, const Vector& witness) {
    if (psi.rows() == 0 || psi.cols() == 0) throw EmptyMatrix();
    if (witness.size() != psi.cols())
      throw DimensionMismatch("witness dimension does not match facet matrix");
    Vector vals = psi * witness;
    if (!(vals.minCoeff() > 0))
      throw DegeneratePolytope("witness is not strictly inside the cone");
    auto c = std::shared_ptr<ConeHandle>(new ConeHandle());
    c->kind_ = ConeKind::PolyhedralFacets;
    c->ambient_dim_ = static_cast<int>(psi.cols());
    c->order_dim_ = static_cast<int>(psi.rows());
    c->psi_ = psi;
    for (int i = 0; i < psi.rows(); ++i) c->psi_.row(i) /= vals(i);
    c->witness_ = witness;
    return c;
  }

  /// PSD(n): points are full symmetric n x n matrices stored row-major.
  static ConePtr psd(int n) {
    if (n < 1) throw DimensionMismatch("PSD matrix order must be >= 1");
    auto c = std::shared_ptr<ConeHandle>(new ConeHandle());
    c->kind_ = ConeKind::Psd;
    c->ambient_dim_ = n * n;
    c->order_dim_ = n;
    return c;
  }

  /// Lorentz(n): ambient dimension n+1 with coordinate layout (s, x_1..x_n).
  static ConePtr lorentz(int n) {
    if (n < 1) throw DimensionMismatch("Lorentz spatial dimension must be >= 1");
    auto c = std::shared_ptr<ConeHandle>(new ConeHandle());
    c->kind_ = ConeKind::Lorentz;
    c->ambient_dim_ = n + 1;
    c->order_dim_ = n;
    return c;
  }

  ConeKind kind() const { return kind_; }
  int ambient_dim() const { return ambient_dim_; }
  /// Matrix order for PSD, spatial dim for Lorentz, facet count otherwise.
  int order_dim() const { return order_dim_; }
  const Matrix& basis() const { return basis_; }
  const Matrix& facet_matrix() const { return psi_; }
  int facet_count() const { return static_cast<int>(psi_.rows()); }
  const Vector& witness() const { return witness_; }

  bool has_facets() const {
    return kind_ == ConeKind::Orthant || kind_ == ConeKind::Simplicial ||
           kind_ == ConeKind::PolyhedralFacets;
  }

  /// Values of the facet functionals at x (facet-described cones only).
  Vector facet_values(const Vector& x) const {
    if (x.size() != ambient_dim_) throw DimensionMismatch("point has wrong dimension");
    if (kind_ == ConeKind::Orthant) return x;
    if (kind_ == ConeKind::Simplicial || kind_ == ConeKind::PolyhedralFacets)
      return psi_ * x;
    throw DimensionMismatch("facet_values: cone is not facet-described");
  }

  JordanElement jordan_element(const Vector& x) const {
    if (x.size() != ambient_dim_) throw DimensionMismatch("point has wrong dimension");
    if (kind_ == ConeKind::Psd) {
      Matrix a = Eigen::Map<const Matrix>(x.data(), order_dim_, order_dim_);
      return JordanElement::sym(a);
    }
    if (kind_ == ConeKind::Lorentz)
      return JordanElement::spin(x(0), x.tail(order_dim_));
    throw DimensionMismatch("jordan_element: cone is not a symmetric cone");
  }

 private:
  ConeHandle() = default;
  ConeKind kind_ = ConeKind::Orthant;
  int ambient_dim_ = 0;
  int order_dim_ = 0;
  Matrix basis_;
  Matrix psi_;
  Vector witness_;
};

struct PointVec {
  Vector coords;
  ConePtr cone;
  bool interior = false;
};

namespace detail {

inline double vec_scale(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

/// -1 outside, 0 boundary, 1 interior (within tolerances).
inline int membership_class(const ConeHandle& cone, const Vector& x) {
  if (cone.has_facets()) {
    Vector vals = cone.facet_values(x);
    double scale = std::max(1e-300, vec_scale(vals));
    double lo = vals.minCoeff();
    if (lo > kInteriorTol * scale) return 1;
    if (lo >= -kRatioTol * scale) return 0;
    return -1;
  }
  JordanElement e = cone.jordan_element(x);
  auto [lo, hi] = eigenvalue_range(e);
  double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  if (lo > kInteriorTol * scale) return 1;
  if (lo >= -kRatioTol * scale) return 0;
  return -1;
}

}  // namespace detail

inline PointVec make_point(ConePtr cone, Vector coords) {
  if (!cone) throw DimensionMismatch("null cone handle");
  if (coords.size() != cone->ambient_dim())
    throw DimensionMismatch("point has wrong dimension for its cone");
  if (cone->kind() == ConeKind::Psd) {
    // enforce symmetry on ingestion
    int n = cone->order_dim();
    Matrix a = Eigen::Map<const Matrix>(coords.data(), n, n);
    Matrix s = 0.5 * (a + a.transpose());
    coords = Eigen::Map<const Vector>(s.data(), n * n);
  }
  int cls = detail::membership_class(*cone, coords);
  if (cls < 0) throw NotInterior("point is not a member of the cone");
  return PointVec{std::move(coords), std::move(cone), cls == 1};
}

inline PointVec make_psd_point(ConePtr cone, const Matrix& a) {
  if (cone->kind() != ConeKind::Psd) throw DimensionMismatch("cone is not PSD");
  int n = cone->order_dim();
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("matrix order mismatch");
  Matrix s = 0.5 * (a + a.transpose());
  Vector flat = Eigen::Map<const Vector>(s.data(), n * n);
  return make_point(cone, flat);
}

inline Matrix psd_matrix_of(const PointVec& p) {
  int n = p.cone->order_dim();
  return Eigen::Map<const Matrix>(p.coords.data(), n, n);
}

struct OrderBounds {
  double M = kInf;   // inf { beta : x <= beta y }
  double m = 0.0;    // sup { alpha : alpha y <= x }
  bool comparable = false;  // mutual domination (same part)
};

namespace detail {

inline OrderBounds bounds_from_facet_values(const Vector& xs, const Vector& ys) {
  const double sx = vec_scale(xs);
  const double sy = vec_scale(ys);
  OrderBounds out;
  double big = -kInf, small = kInf;
  bool infinite = false;
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    const bool xz = xs(i) <= kRatioTol * sx;
    const bool yz = ys(i) <= kRatioTol * sy;
    if (yz && xz) continue;
    if (yz) {
      infinite = true;
      continue;
    }
    const double r = xz ? 0.0 : xs(i) / ys(i);
    big = std::max(big, r);
    small = std::min(small, r);
  }
  if (big == -kInf) {  // x and y vanish on every compared facet
    out.M = 0.0;
    out.m = 0.0;
    out.comparable = false;
    return out;
  }
  out.M = infinite ? kInf : big;
  out.m = small;
  out.comparable = std::isfinite(out.M) && out.m > 0.0;
  return out;
}

inline OrderBounds bounds_psd(const Matrix& x, const Matrix& y);

/// Order bounds restricted to the face of the PSD cone spanned by range(y).
inline OrderBounds bounds_psd_boundary(const Matrix& x, const Matrix& y) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(y);
  const Vector& ev = es.eigenvalues();
  const int n = static_cast<int>(ev.size());
  double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  double tol = kRatioTol * std::max(1.0, scale);
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (ev(i) > tol) ++r;
  OrderBounds out;
  if (r == 0) {  // y = 0 handled by callers; be safe
    out.M = 0.0;
    return out;
  }
  Matrix q = es.eigenvectors().rightCols(r);
  // x must be supported on range(y) for any beta with x <= beta y to exist
  Matrix xr = q.transpose() * x * q;
  Matrix resid = x - q * xr * q.transpose();
  double xscale = std::max(1.0, x.cwiseAbs().maxCoeff());
  bool supported = resid.cwiseAbs().maxCoeff() <= 1e-10 * xscale;
  if (supported) {
    Matrix yr = q.transpose() * y * q;
    return bounds_psd(xr, yr);
  }
  out.M = kInf;
  // m(x/y) = 1 / M(y/x): finite only if range(y) is inside range(x)
  Eigen::SelfAdjointEigenSolver<Matrix> ex(x);
  const Vector& xv = ex.eigenvalues();
  double xs = std::max(std::abs(xv(0)), std::abs(xv(xv.size() - 1)));
  double xtol = kRatioTol * std::max(1.0, xs);
  int rx = 0;
  for (int i = 0; i < xv.size(); ++i)
    if (xv(i) > xtol) ++rx;
  if (rx > 0) {
    Matrix qx = ex.eigenvectors().rightCols(rx);
    Matrix yresid = y - qx * (qx.transpose() * y * qx) * qx.transpose();
    double yscale = std::max(1.0, y.cwiseAbs().maxCoeff());
    if (yresid.cwiseAbs().maxCoeff() <= 1e-10 * yscale) {
      OrderBounds rev = bounds_psd(qx.transpose() * y * qx, qx.transpose() * x * qx);
      out.m = std::isfinite(rev.M) && rev.M > 0 ? 1.0 / rev.M : 0.0;
    }
  }
  out.comparable = false;
  return out;
}

inline OrderBounds bounds_psd(const Matrix& x, const Matrix& y) {
  JordanElement ye = JordanElement::sym(y);
  if (!is_interior(ye)) return bounds_psd_boundary(x, y);
  auto [lo, hi] = lambda_bounds(JordanElement::sym(x), ye);
  OrderBounds out;
  out.M = hi;
  out.m = lo;
  out.comparable = lo > kRatioTol * std::max(1.0, std::abs(hi));
  return out;
}

inline OrderBounds bounds_lorentz(const Vector& x, const Vector& y) {
  const int n = static_cast<int>(x.size()) - 1;
  const double sy = y(0);
  const double uy = y.tail(n).norm();
  OrderBounds out;
  if (sy - uy > kInteriorTol * std::max(1.0, sy + uy)) {
    JordanElement xe = JordanElement::spin(x(0), x.tail(n));
    JordanElement ye = JordanElement::spin(sy, y.tail(n));
    auto [lo, hi] = lambda_bounds(xe, ye);
    out.M = hi;
    out.m = lo;
    out.comparable = lo > kRatioTol * std::max(1.0, std::abs(hi));
    return out;
  }
  // boundary base ray: the part of y is {lambda y : lambda > 0}
  const double lambda = x(0) / sy;
  double scale = std::max(1.0, vec_scale(x));
  if ((x - lambda * y).cwiseAbs().maxCoeff() <= 1e-10 * scale) {
    out.M = lambda;
    out.m = lambda;
    out.comparable = lambda > 0;
    return out;
  }
  out.M = kInf;
  const double c1 = x(0) * sy - x.tail(n).dot(y.tail(n));
  const double c0 = x(0) * x(0) - x.tail(n).squaredNorm();
  double m = x(0) / sy;
  if (c1 > 0) m = std::min(m, 0.5 * c0 / c1);
  out.m = std::max(0.0, m);
  out.comparable = false;
  return out;
}

inline bool is_zero_point(const PointVec& p) {
  return detail::vec_scale(p.coords) == 0.0;
}

inline void require_same_cone(const PointVec& x, const PointVec& y) {
  if (x.cone == y.cone) return;
  if (!x.cone || !y.cone) throw ConeMismatch();
  if (x.cone->kind() != y.cone->kind() || x.cone->ambient_dim() != y.cone->ambient_dim())
    throw ConeMismatch();
  if (x.cone->has_facets() && x.cone->kind() != ConeKind::Orthant) {
    if ((x.cone->facet_matrix() - y.cone->facet_matrix()).cwiseAbs().maxCoeff() > 0)
      throw ConeMismatch();
  }
}

}  // namespace detail

/// M(x/y) and m(x/y). Throws ZeroDenominator when y = 0.
inline OrderBounds order_bounds(const PointVec& x, const PointVec& y) {
  detail::require_same_cone(x, y);
  if (detail::is_zero_point(y)) throw ZeroDenominator();
  if (detail::is_zero_point(x)) return OrderBounds{0.0, 0.0, false};
  const ConeHandle& cone = *x.cone;
  switch (cone.kind()) {
    case ConeKind::Orthant:
    case ConeKind::Simplicial:
    case ConeKind::PolyhedralFacets:
      return detail::bounds_from_facet_values(cone.facet_values(x.coords),
                                              cone.facet_values(y.coords));
    case ConeKind::Psd: {
      int n = cone.order_dim();
      Matrix xm = Eigen::Map<const Matrix>(x.coords.data(), n, n);
      Matrix ym = Eigen::Map<const Matrix>(y.coords.data(), n, n);
      return detail::bounds_psd(xm, ym);
    }
    case ConeKind::Lorentz:
      return detail::bounds_lorentz(x.coords, y.coords);
  }
  throw DimensionMismatch("unknown cone kind");
}

/// d(x,y) = log( M(x/y) / m(x/y) ); 0 for the pair (0,0), +inf across parts.
inline double hilbert_distance(const PointVec& x, const PointVec& y) {
  detail::require_same_cone(x, y);
  const bool xz = detail::is_zero_point(x);
  const bool yz = detail::is_zero_point(y);
  if (xz && yz) return 0.0;
  if (xz || yz) return kInf;
  OrderBounds b = order_bounds(x, y);
  if (!b.comparable) return kInf;
  return std::log(b.M / b.m);
}

/// d_T(x,y) = max( log M(x/y), log M(y/x) ).
inline double thompson_distance(const PointVec& x, const PointVec& y) {
  detail::require_same_cone(x, y);
  const bool xz = detail::is_zero_point(x);
  const bool yz = detail::is_zero_point(y);
  if (xz && yz) return 0.0;
  if (xz || yz) return kInf;
  OrderBounds b = order_bounds(x, y);
  if (!b.comparable) return kInf;
  return std::max(std::log(b.M), -std::log(b.m));
}

/// Funk weak metric F(x,y) = log M(x/y); asymmetric, interior points only.
inline double funk_weak_metric(const PointVec& x, const PointVec& y) {
  detail::require_same_cone(x, y);
  if (!x.interior || !y.interior)
    throw NotInterior("funk_weak_metric requires interior points");
  OrderBounds b = order_bounds(x, y);
  return std::log(b.M);
}

/// True iff x and y lie in the same part (mutual domination).
inline bool same_part(const PointVec& x, const PointVec& y) {
  detail::require_same_cone(x, y);
  const bool xz = detail::is_zero_point(x);
  const bool yz = detail::is_zero_point(y);
  if (xz || yz) return xz == yz;  // {0} is a part
  return order_bounds(x, y).comparable;
}

// ---------------------------------------------------------------------------
// Homogenization: the cone over a polytope at height 1.

/// Facet enumeration of conv(rows of V) by brute force over vertex subsets.
/// Intended for the low dimensions (<= 4 or so) exercised here.
inline std::pair<Matrix, Vector> facets_from_vertices(const Matrix& verts) {
  const int k = static_cast<int>(verts.rows());
  const int n = static_cast<int>(verts.cols());
  if (k < n + 1) throw DegeneratePolytope("too few vertices for full dimension");
  Vector center = verts.colwise().mean();
  Matrix centered = verts.rowwise() - center.transpose();
  Eigen::JacobiSVD<Matrix> dimcheck(centered);
  double s0 = dimcheck.singularValues()(0);
  if (!(dimcheck.singularValues().minCoeff() > 1e-10 * std::max(1.0, s0)))
    throw DegeneratePolytope("vertices do not affinely span the ambient space");

  const double scale = std::max(1.0, verts.cwiseAbs().maxCoeff());
  const double tol = 1e-9 * scale;
  std::vector<Vector> normals;
  std::vector<double> offsets;

  auto try_add = [&](Vector c, double gamma) {
    double nrm = c.norm();
    if (nrm <= 1e-12) return;
    c /= nrm;
    gamma /= nrm;
    double lo = kInf, hi = -kInf;
    for (int v = 0; v < k; ++v) {
      double s = c.dot(verts.row(v)) - gamma;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (hi > tol && lo < -tol) return;  // hyperplane cuts the polytope
    if (hi > tol) {                     // flip so that c.x <= gamma holds
      c = -c;
      gamma = -gamma;
    }
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if ((normals[j] - c).cwiseAbs().maxCoeff() < 1e-8 &&
          std::abs(offsets[j] - gamma) < 1e-8 * scale)
        return;
    }
    normals.push_back(c);
    offsets.push_back(gamma);
  };

  if (n == 1) {
    try_add(Vector::Ones(1), verts.col(0).maxCoeff());
    try_add(-Vector::Ones(1), -verts.col(0).minCoeff());
  } else {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      Matrix d(n - 1, n);
      for (int i = 1; i < n; ++i) d.row(i - 1) = verts.row(idx[i]) - verts.row(idx[0]);
      Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeFullV);
      double smax = svd.singularValues()(0);
      double smin = n >= 2 ? svd.singularValues()(n - 2) : 1.0;
      if (n == 2 ? smax > tol : smin > tol * std::max(1.0, smax)) {
        Vector c = svd.matrixV().col(n - 1);
        try_add(c, c.dot(verts.row(idx[0])));
      }
      // next n-combination of {0..k-1}
      int pos = n - 1;
      while (pos >= 0 && idx[pos] == k - n + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  if (normals.empty()) throw DegeneratePolytope("no facets found");
  Matrix a(static_cast<int>(normals.size()), n);
  Vector b(static_cast<int>(normals.size()));
  for (std::size_t i = 0; i < normals.size(); ++i) {
    a.row(i) = normals[i].transpose();
    b(i) = offsets[i];
  }
  return {a, b};
}

/// Cone over the polytope {x : A x <= b} at height 1: points (lambda x, lambda).
/// Facet functionals psi_r(z, s) = b_r s - a_r . z, normalized at (witness, 1).
inline ConePtr homogenize(const Matrix& a, const Vector& b, const Vector& witness) {
  if (a.rows() == 0 || a.cols() == 0) throw EmptyMatrix();
  if (b.size() != a.rows() || witness.size() != a.cols())
    throw DimensionMismatch("inconsistent inequality system");
  if (!((b - a * witness).minCoeff() > 0))
    throw DegeneratePolytope("witness is not strictly inside the polytope");
  const int n = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());
  Matrix psi(m, n + 1);
  psi.leftCols(n) = -a;
  psi.col(n) = b;
  Vector u(n + 1);
  u.head(n) = witness;
  u(n) = 1.0;
  return ConeHandle::polyhedral(psi, u);
}

/// Vertex-input overload: enumerates facets first, witness = barycenter.
inline ConePtr homogenize(const Matrix& verts) {
  auto [a, b] = facets_from_vertices(verts);
  Vector center = verts.colwise().mean();
  return homogenize(a, b, center);
}

/// Lift a polytope point x to the cone point (x, 1).
inline PointVec lift_to_cone(ConePtr cone, const Vector& x) {
  Vector z(x.size() + 1);
  z.head(x.size()) = x;
  z(x.size()) = 1.0;
  return make_point(std::move(cone), z);
}

}  // namespace cones
