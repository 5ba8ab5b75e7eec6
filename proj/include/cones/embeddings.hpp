#pragma once

// Isometric embeddings of simplex and polytope Hilbert geometries:
// the Log map onto the variation-norm space, the simplex norm |.|_H,
// and the facet-ratio embedding into a sup-norm space.

#include <cmath>

#include "cones/common.hpp"
#include "cones/core.hpp"

namespace cones {

enum class TargetNorm { Variation, HexagonalH, SupNorm };

struct EmbeddedPoint {
  Vector coords;
  TargetNorm target_norm;
};

/// |w|_var = max_i w_i - min_j w_j.
inline double variation_norm(const Vector& w) {
  if (w.size() == 0) throw EmptyVector();
  return w.maxCoeff() - w.minCoeff();
}

/// |x|_H = max(x_1,..,x_n,0) - min(x_1,..,x_n,0). An n-simplex Hilbert
/// geometry is isometric to (R^n, |.|_H); the unit ball is a polytope
/// with n(n+1) facets (a hexagon for n = 2).
inline double h_norm(const Vector& x) {
  if (x.size() == 0) throw EmptyVector();
  return std::max(x.maxCoeff(), 0.0) - std::min(x.minCoeff(), 0.0);
}

inline double sup_norm(const Vector& x) {
  if (x.size() == 0) throw EmptyVector();
  return x.cwiseAbs().maxCoeff();
}

inline double embedded_norm(const EmbeddedPoint& p) {
  switch (p.target_norm) {
    case TargetNorm::Variation:
      return variation_norm(p.coords);
    case TargetNorm::HexagonalH:
      return h_norm(p.coords);
    case TargetNorm::SupNorm:
      return sup_norm(p.coords);
  }
  return sup_norm(p.coords);
}

inline double embedded_distance(const EmbeddedPoint& p, const EmbeddedPoint& q) {
  if (p.target_norm != q.target_norm || p.coords.size() != q.coords.size())
    throw DimensionMismatch("embedded points live in different targets");
  EmbeddedPoint d{p.coords - q.coords, p.target_norm};
  return embedded_norm(d);
}

/// Coordinatewise log; an isometry from the open orthant onto
/// (R^n, |.|_var).
inline EmbeddedPoint log_map(const Vector& x) {
  if (x.size() == 0) throw EmptyVector();
  if (!(x.minCoeff() > 0)) throw NotInterior("log map needs strictly positive coordinates");
  return {x.array().log().matrix(), TargetNorm::Variation};
}

/// Open-simplex point (positive, sums to 1) -> R^n with |.|_H:
/// dehomogenize at base_index, take logs, project out that coordinate.
inline EmbeddedPoint simplex_isometry(const Vector& x, int base_index = 0) {
  const int n1 = static_cast<int>(x.size());
  if (n1 < 2) throw DimensionMismatch("simplex point needs at least 2 coordinates");
  if (base_index < 0 || base_index >= n1) throw DimensionMismatch("base index out of range");
  if (!(x.minCoeff() > 0)) throw NotInterior("simplex point must be strictly positive");
  if (std::abs(x.sum() - 1.0) > 1e-9)
    throw NotInterior("simplex point coordinates must sum to 1");
  Vector out(n1 - 1);
  int k = 0;
  for (int i = 0; i < n1; ++i) {
    if (i == base_index) continue;
    out(k++) = std::log(x(i) / x(base_index));
  }
  return {out, TargetNorm::HexagonalH};
}

/// Facet-ratio embedding Psi_ij(x) = log(psi_i(x)/psi_j(x)), i < j in
/// lexicographic order, into (R^{m(m-1)/2}, |.|_inf).
inline EmbeddedPoint polytope_embedding(const PointVec& x) {
  const ConeHandle& cone = *x.cone;
  if (!cone.has_facets())
    throw DimensionMismatch("polytope embedding needs a facet-described cone");
  if (!x.interior) throw NotInterior("polytope embedding needs an interior point");
  Vector vals = cone.facet_values(x.coords);
  const int m = static_cast<int>(vals.size());
  Vector out(m * (m - 1) / 2);
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out(k++) = std::log(vals(i) / vals(j));
  return {out, TargetNorm::SupNorm};
}

}  // namespace cones
