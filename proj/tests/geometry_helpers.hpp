#pragma once

// Seeded random polytope generation and interior sampling used by the
// cross-ratio, embedding, and acceptance suites.

#include <random>

#include "cones/polytope.hpp"
#include "oracle_helpers.hpp"

namespace oracle {

using cones::PolytopalDomain;

/// Box [-1,1]^n cut by a few random halfspaces that keep 0 well inside.
inline PolytopalDomain random_polytope(std::mt19937_64& g, int n, int extra_cuts) {
  int rows = 2 * n + extra_cuts;
  Matrix a = Matrix::Zero(rows, n);
  Vector b(rows);
  for (int i = 0; i < n; ++i) {
    a(2 * i, i) = 1.0;
    b(2 * i) = 1.0;
    a(2 * i + 1, i) = -1.0;
    b(2 * i + 1) = 1.0;
  }
  for (int j = 0; j < extra_cuts; ++j) {
    Vector dir = random_gaussian(g, n);
    dir.normalize();
    a.row(2 * n + j) = dir.transpose();
    b(2 * n + j) = uniform(g, 0.35, 0.9);
  }
  return PolytopalDomain(a, b, Vector::Zero(n));
}

/// Interior point by clipping a ray from the witness: no rejection loop.
inline Vector sample_interior(std::mt19937_64& g, const PolytopalDomain& dom,
                              double max_fraction = 0.85) {
  Vector dir = random_gaussian(g, dom.dim());
  dir.normalize();
  double t = dom.ray_sup(dom.witness(), dir);
  return dom.witness() + uniform(g, 0.0, max_fraction) * t * dir;
}

}  // namespace oracle
