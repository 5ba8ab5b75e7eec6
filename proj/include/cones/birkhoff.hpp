#pragma once

// Projective diameter, Birkhoff contraction ratio kappa = tanh(Delta/4),
// and Hilbert-metric power iteration with an a-posteriori certificate.

#include <cmath>
#include <random>
#include <vector>

#include "cones/common.hpp"
#include "cones/core.hpp"

namespace cones {

struct PositiveLinearMap {
  Matrix entries;
  bool strictly_positive = false;

  static PositiveLinearMap from(Matrix a) {
    if (a.rows() == 0 || a.cols() == 0) throw EmptyMatrix();
    if (a.minCoeff() < 0) throw NegativeInput();
    PositiveLinearMap out;
    out.strictly_positive = a.minCoeff() > 0;
    out.entries = std::move(a);
    return out;
  }

  Vector apply(const Vector& x) const {
    if (x.size() != entries.cols()) throw DimensionMismatch("matrix-vector size mismatch");
    return entries * x;
  }
};

namespace detail {

/// Hilbert distance between nonnegative vectors (orthant, support-aware).
inline double orthant_hilbert(const Vector& x, const Vector& y) {
  OrderBounds b = bounds_from_facet_values(x, y);
  if (!b.comparable) return kInf;
  return std::log(b.M / b.m);
}

}  // namespace detail

/// Delta(A) = max_{i,j} d(A e_i, A e_j) over column pairs; +inf when two
/// columns lie in different parts of the image cone.
inline double projective_diameter(const PositiveLinearMap& a) {
  const Matrix& m = a.entries;
  if (m.rows() == 0 || m.cols() == 0) throw EmptyMatrix();
  double best = 0.0;
  for (int i = 0; i < m.cols() && std::isfinite(best); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      double d = detail::orthant_hilbert(m.col(i), m.col(j));
      if (d > best) best = d;
      if (std::isinf(best)) break;
    }
  }
  return best;
}

/// kappa = tanh(Delta/4), with tanh(inf) = 1.
inline double contraction_ratio(double delta) {
  if (std::isnan(delta) || delta < 0) throw NegativeDiameter();
  if (std::isinf(delta)) return 1.0;
  return std::tanh(0.25 * delta);
}

/// Sampled estimate of sup d(Ax,Ay)/d(x,y). Random interior pairs are
/// complemented by a deterministic probe along the two-dimensional face
/// spanned by the extremal column pair, where the supremum is approached;
/// the result is a lower bound for tanh(Delta/4) and converges to it.
inline double empirical_contraction(const PositiveLinearMap& a, int n_samples,
                                    std::uint64_t seed) {
  if (!a.strictly_positive)
    throw HypothesisViolated("empirical_contraction needs strictly positive entries");
  if (n_samples < 1) throw ArgumentTooSmall("n_samples must be >= 1");
  const Matrix& m = a.entries;
  const int n = static_cast<int>(m.cols());
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> logu(-2.5, 2.5);

  double best = 0.0;
  Vector x(n), y(n);
  for (int s = 0; s < n_samples; ++s) {
    for (int i = 0; i < n; ++i) x(i) = std::exp(logu(g));
    for (int i = 0; i < n; ++i) y(i) = std::exp(logu(g));
    double dxy = detail::orthant_hilbert(x, y);
    if (!(dxy > 1e-9)) continue;
    double dimg = detail::orthant_hilbert(m * x, m * y);
    best = std::max(best, dimg / dxy);
  }

  if (n >= 2) {
    // extremal 4-tuple of the explicit diameter formula
    int bi = 0, bj = 1, bp = 0, bq = 0;
    double ratio = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < m.rows(); ++p)
          for (int q = 0; q < m.rows(); ++q) {
            double r = m(p, i) * m(q, j) / (m(p, j) * m(q, i));
            if (r > ratio) {
              ratio = r;
              bi = i;
              bj = j;
              bp = p;
              bq = q;
            }
          }
    double ustar = std::sqrt(m(bp, bj) * m(bq, bj) / (m(bp, bi) * m(bq, bi)));
    for (double eps : {5e-4, 5e-3, 5e-2}) {
      Vector x1 = Vector::Zero(n), x2 = Vector::Zero(n);
      x1(bi) = ustar * std::exp(-eps);
      x1(bj) = 1.0;
      x2(bi) = ustar * std::exp(eps);
      x2(bj) = 1.0;
      double dimg = detail::orthant_hilbert(m * x1, m * x2);
      best = std::max(best, dimg / (2.0 * eps));
    }
  }
  return best;
}

struct ContractionCertificate {
  double delta = 0.0;
  double kappa = 0.0;
  int iterations = 0;
  double final_residual = 0.0;
  /// r_{k+1} <= kappa r_k + 1e-9 held along the whole run.
  bool rate_bound_satisfied = false;
  /// Stopping rule was residual < tol (1 - kappa); false when kappa = 1,
  /// where the plain residual < tol stop carries no error bound.
  bool certified = false;
};

struct PowerIterationResult {
  Vector v;       // |v|_1 = 1
  double lambda;  // cone spectral radius estimate
  ContractionCertificate cert;
  std::vector<double> residuals;  // d(x_{k+1}, x_k) per iteration
};

inline PowerIterationResult power_iteration(const PositiveLinearMap& a, const Vector& x0,
                                            double tol = 1e-12, int max_iter = 100000) {
  const Matrix& m = a.entries;
  if (m.rows() != m.cols()) throw DimensionMismatch("power iteration needs a square matrix");
  if (x0.size() != m.cols()) throw DimensionMismatch("start vector size mismatch");
  if (!(x0.minCoeff() > 0)) throw NotInterior("start vector must be interior");

  PowerIterationResult out;
  out.cert.delta = projective_diameter(a);
  out.cert.kappa = contraction_ratio(out.cert.delta);
  out.cert.certified = out.cert.kappa < 1.0;
  const double threshold = out.cert.certified ? tol * (1.0 - out.cert.kappa) : tol;

  Vector x = x0 / x0.sum();
  bool rate_ok = true;
  double prev_r = kInf;
  for (int k = 1; k <= max_iter; ++k) {
    Vector y = m * x;
    y /= y.sum();
    double r = detail::orthant_hilbert(y, x);
    if (std::isfinite(prev_r) && r > out.cert.kappa * prev_r + 1e-9) rate_ok = false;
    out.residuals.push_back(r);
    prev_r = r;
    x = y;
    if (r < threshold) {
      out.cert.iterations = k;
      out.cert.final_residual = r;
      out.cert.rate_bound_satisfied = rate_ok;
      out.v = x;
      out.lambda = (m * x).sum();
      return out;
    }
  }
  throw NoConvergence(max_iter);
}

}  // namespace cones
