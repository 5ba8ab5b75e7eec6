#pragma once

// Hilbert's classical cross-ratio metric on bounded convex polytopal
// domains, plus the chord clipping it needs.

#include <cmath>
#include <utility>

#include "cones/common.hpp"
#include "cones/core.hpp"

namespace cones {

enum class AmbientNorm { L2, L1, LInf };

inline double ambient_norm(const Vector& v, AmbientNorm n) {
  switch (n) {
    case AmbientNorm::L2:
      return v.norm();
    case AmbientNorm::L1:
      return v.lpNorm<1>();
    case AmbientNorm::LInf:
      return v.lpNorm<Eigen::Infinity>();
  }
  return v.norm();
}

/// Bounded convex domain {x : A x <= b} with a certified interior witness.
/// Construction rejects domains that are unbounded along any coordinate
/// axis; pass certify_bounded = false to skip the check (pathological
/// unbounded H-polyhedra then slip through at the caller's risk).
class PolytopalDomain {
 public:
  PolytopalDomain(Matrix a, Vector b, Vector witness, bool certify_bounded = true)
      : a_(std::move(a)), b_(std::move(b)), witness_(std::move(witness)) {
    if (a_.rows() == 0 || a_.cols() == 0) throw EmptyMatrix();
    if (b_.size() != a_.rows() || witness_.size() != a_.cols())
      throw DimensionMismatch("inconsistent inequality system");
    if (!((b_ - a_ * witness_).minCoeff() > 0))
      throw DegeneratePolytope("witness does not strictly satisfy all inequalities");
    if (certify_bounded) {
      double bound = 0.0;
      for (int i = 0; i < dim(); ++i) {
        for (double sign : {1.0, -1.0}) {
          Vector dir = Vector::Zero(dim());
          dir(i) = sign;
          double t = ray_sup(witness_, dir);
          if (!std::isfinite(t))
            throw UnboundedDomain("domain is unbounded along a coordinate axis");
          bound = std::max(bound, std::abs(witness_(i)) + t);
        }
      }
      box_bound_ = bound;
    } else {
      box_bound_ = kInf;
    }
  }

  static PolytopalDomain from_vertices(const Matrix& verts, bool certify_bounded = true) {
    auto [a, b] = facets_from_vertices(verts);
    Vector center = verts.colwise().mean();
    return PolytopalDomain(std::move(a), std::move(b), std::move(center), certify_bounded);
  }

  int dim() const { return static_cast<int>(a_.cols()); }
  int facet_count() const { return static_cast<int>(a_.rows()); }
  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }
  const Vector& witness() const { return witness_; }
  /// Max coordinate magnitude reachable from the witness along the axes.
  double box_bound() const { return box_bound_; }

  bool contains_strict(const Vector& x) const {
    double scale = std::max(1.0, b_.cwiseAbs().maxCoeff());
    return (b_ - a_ * x).minCoeff() > kInteriorTol * scale;
  }

  /// sup { t >= 0 : x + t d satisfies all inequalities }, +inf if unbounded.
  double ray_sup(const Vector& x, const Vector& d) const {
    double sup = kInf;
    Vector g = a_ * d;
    Vector h = b_ - a_ * x;
    for (int r = 0; r < a_.rows(); ++r)
      if (g(r) > 0) sup = std::min(sup, h(r) / g(r));
    return sup;
  }

  /// The cone {(lambda x, lambda) : x in domain}.
  ConePtr homogenized() const { return homogenize(a_, b_, witness_); }

 private:
  Matrix a_;
  Vector b_;
  Vector witness_;
  double box_bound_ = kInf;
};

/// Chord of the domain through x and y: p(t) = x + t (y - x), with the
/// boundary hit behind x at t_minus <= 0 and beyond y at t_plus >= 1.
struct ChordEndpoints {
  Vector x_prime;
  Vector y_prime;
  double t_minus = 0.0;
  double t_plus = 0.0;
};

inline ChordEndpoints boundary_intersections(const Vector& x, const Vector& y,
                                             const PolytopalDomain& dom) {
  if (x.size() != dom.dim() || y.size() != dom.dim())
    throw DimensionMismatch("points do not match the domain dimension");
  if (!dom.contains_strict(x) || !dom.contains_strict(y))
    throw NotInterior("chord endpoints must be interior");
  Vector dir = y - x;
  double scale = std::max(1.0, std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()));
  if (dir.cwiseAbs().maxCoeff() <= 1e-14 * scale) throw PointsCoincide();

  // two-pass max/min over facet parameters
  double t_plus = kInf, t_minus = -kInf;
  Vector g = dom.a() * dir;
  Vector h = dom.b() - dom.a() * x;
  for (int r = 0; r < dom.a().rows(); ++r) {
    double denom_scale = dom.a().row(r).norm() * dir.norm();
    if (std::abs(g(r)) <= 1e-14 * denom_scale) continue;  // parallel facet
    double t = h(r) / g(r);
    if (g(r) > 0)
      t_plus = std::min(t_plus, t);
    else
      t_minus = std::max(t_minus, t);
  }
  if (!std::isfinite(t_plus) || !std::isfinite(t_minus))
    throw UnboundedDomain("chord does not meet the boundary in both directions");
  ChordEndpoints out;
  out.t_minus = t_minus;
  out.t_plus = t_plus;
  out.x_prime = x + t_minus * dir;
  out.y_prime = x + t_plus * dir;
  return out;
}

/// delta(x,y) = log( (|x'-y| / |x'-x|) (|y'-x| / |y'-y|) ).
inline double cross_ratio_distance(const Vector& x, const Vector& y,
                                   const PolytopalDomain& dom,
                                   AmbientNorm norm = AmbientNorm::L2) {
  if (x.size() != dom.dim() || y.size() != dom.dim())
    throw DimensionMismatch("points do not match the domain dimension");
  double scale = std::max(1.0, std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()));
  if ((y - x).cwiseAbs().maxCoeff() <= 1e-14 * scale) {
    if (!dom.contains_strict(x)) throw NotInterior("point must be interior");
    return 0.0;
  }
  ChordEndpoints ce = boundary_intersections(x, y, dom);
  double a = ambient_norm(ce.x_prime - y, norm) / ambient_norm(ce.x_prime - x, norm);
  double b = ambient_norm(ce.y_prime - x, norm) / ambient_norm(ce.y_prime - y, norm);
  return std::log(a * b);
}

}  // namespace cones
