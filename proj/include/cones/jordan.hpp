#pragma once

// Euclidean Jordan algebra computations for the two concrete symmetric cones:
// real symmetric matrices (PSD cone) and spin factors (Lorentz cone).

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "cones/common.hpp"

namespace cones {

enum class AlgebraKind { SymMatrices, SpinFactor };

/// Eigenvalue clustering tolerance when grouping a spectral decomposition
/// into distinct-eigenvalue idempotent blocks.
inline constexpr double kEigClusterTol = 1e-9;

class JordanElement {
 public:
  static JordanElement sym(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
      throw DimensionMismatch("symmetric element must be square and nonempty");
    JordanElement e;
    e.algebra_ = AlgebraKind::SymMatrices;
    e.mat_ = 0.5 * (a + a.transpose());  // enforce symmetry on ingestion
    return e;
  }

  static JordanElement spin(double s, const Vector& x) {
    if (x.size() == 0) throw DimensionMismatch("spin factor needs spatial dimension >= 1");
    JordanElement e;
    e.algebra_ = AlgebraKind::SpinFactor;
    e.scalar_ = s;
    e.vec_ = x;
    return e;
  }

  static JordanElement unit_like(const JordanElement& x) {
    if (x.algebra_ == AlgebraKind::SymMatrices)
      return sym(Matrix::Identity(x.mat_.rows(), x.mat_.cols()));
    return spin(1.0, Vector::Zero(x.vec_.size()));
  }

  AlgebraKind algebra() const { return algebra_; }
  const Matrix& mat() const { return mat_; }
  double scalar() const { return scalar_; }
  const Vector& vec() const { return vec_; }

  bool same_algebra(const JordanElement& o) const {
    if (algebra_ != o.algebra_) return false;
    if (algebra_ == AlgebraKind::SymMatrices) return mat_.rows() == o.mat_.rows();
    return vec_.size() == o.vec_.size();
  }

  JordanElement operator+(const JordanElement& o) const {
    require_same(o);
    if (algebra_ == AlgebraKind::SymMatrices) return sym(mat_ + o.mat_);
    return spin(scalar_ + o.scalar_, vec_ + o.vec_);
  }

  JordanElement operator-(const JordanElement& o) const {
    require_same(o);
    if (algebra_ == AlgebraKind::SymMatrices) return sym(mat_ - o.mat_);
    return spin(scalar_ - o.scalar_, vec_ - o.vec_);
  }

  JordanElement operator*(double t) const {
    if (algebra_ == AlgebraKind::SymMatrices) return sym(t * mat_);
    return spin(t * scalar_, t * vec_);
  }

  double inner(const JordanElement& o) const {
    require_same(o);
    if (algebra_ == AlgebraKind::SymMatrices)
      return (mat_.transpose() * o.mat_).trace();
    return scalar_ * o.scalar_ + vec_.dot(o.vec_);
  }

  double norm() const { return std::sqrt(inner(*this)); }

  void require_same(const JordanElement& o) const {
    if (!same_algebra(o)) throw AlgebraMismatch();
  }

 private:
  JordanElement() = default;
  AlgebraKind algebra_ = AlgebraKind::SymMatrices;
  Matrix mat_;
  double scalar_ = 0.0;
  Vector vec_;
};

inline JordanElement operator*(double t, const JordanElement& x) { return x * t; }

/// A ∘ B = (AB + BA)/2 on symmetric matrices;
/// (s,x) ∘ (t,y) = (st + <x,y>, sy + tx) on spin factors.
inline JordanElement jordan_product(const JordanElement& a, const JordanElement& b) {
  a.require_same(b);
  if (a.algebra() == AlgebraKind::SymMatrices) {
    Matrix p = 0.5 * (a.mat() * b.mat() + b.mat() * a.mat());
    return JordanElement::sym(p);
  }
  double s = a.scalar() * b.scalar() + a.vec().dot(b.vec());
  Vector v = a.scalar() * b.vec() + b.scalar() * a.vec();
  return JordanElement::spin(s, v);
}

struct SpectralDecomposition {
  std::vector<double> eigenvalues;        // distinct, ascending
  std::vector<JordanElement> idempotents; // complete orthogonal system
};

inline SpectralDecomposition spectral_decompose(const JordanElement& x) {
  SpectralDecomposition out;
  if (x.algebra() == AlgebraKind::SymMatrices) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(x.mat());
    const Vector& vals = es.eigenvalues();
    const Matrix& q = es.eigenvectors();
    const int n = static_cast<int>(vals.size());
    double scale = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    double tol = kEigClusterTol * std::max(1.0, scale);
    int i = 0;
    while (i < n) {
      int j = i;
      double sum = 0.0;
      while (j < n && vals(j) - vals(i) <= tol) sum += vals(j++);
      Matrix proj = Matrix::Zero(x.mat().rows(), x.mat().cols());
      for (int k = i; k < j; ++k) proj += q.col(k) * q.col(k).transpose();
      out.eigenvalues.push_back(sum / (j - i));
      out.idempotents.push_back(JordanElement::sym(proj));
      i = j;
    }
    return out;
  }
  // spin factor: eigenvalues s +- |x| with idempotents (1, +-x/|x|)/2
  double s = x.scalar();
  double r = x.vec().norm();
  if (r <= kEigClusterTol * std::max(1.0, std::abs(s))) {
    out.eigenvalues.push_back(s);
    out.idempotents.push_back(JordanElement::unit_like(x));
    return out;
  }
  Vector u = x.vec() / r;
  out.eigenvalues.push_back(s - r);
  out.idempotents.push_back(JordanElement::spin(0.5, -0.5 * u));
  out.eigenvalues.push_back(s + r);
  out.idempotents.push_back(JordanElement::spin(0.5, 0.5 * u));
  return out;
}

inline std::pair<double, double> eigenvalue_range(const JordanElement& x) {
  auto d = spectral_decompose(x);
  return {d.eigenvalues.front(), d.eigenvalues.back()};
}

/// x interior to the cone of squares <=> all eigenvalues > 0.
inline bool is_interior(const JordanElement& x) {
  auto [lo, hi] = eigenvalue_range(x);
  return lo > kInteriorTol * std::max(1.0, std::abs(hi));
}

inline bool in_cone(const JordanElement& x) {
  auto [lo, hi] = eigenvalue_range(x);
  return lo >= -kInteriorTol * std::max(1.0, std::abs(hi));
}

/// Functional calculus through the spectral decomposition.
inline JordanElement apply_spectral(const JordanElement& x,
                                    const std::function<double(double)>& f) {
  auto d = spectral_decompose(x);
  JordanElement acc = d.idempotents[0] * f(d.eigenvalues[0]);
  for (std::size_t i = 1; i < d.idempotents.size(); ++i)
    acc = acc + d.idempotents[i] * f(d.eigenvalues[i]);
  return acc;
}

inline JordanElement jordan_sqrt(const JordanElement& x) {
  return apply_spectral(x, [](double t) {
    if (t < 0) throw NotInvertible("sqrt of element with negative eigenvalue");
    return std::sqrt(t);
  });
}

inline JordanElement jordan_pow(const JordanElement& x, double t) {
  return apply_spectral(x, [t](double v) {
    if (v <= 0) throw NotInvertible("power of element with nonpositive eigenvalue");
    return std::pow(v, t);
  });
}

inline JordanElement jordan_log(const JordanElement& x) {
  return apply_spectral(x, [](double v) {
    if (v <= 0) throw NotInvertible("log of element with nonpositive eigenvalue");
    return std::log(v);
  });
}

inline JordanElement jordan_exp(const JordanElement& x) {
  return apply_spectral(x, [](double v) { return std::exp(v); });
}

/// Quadratic representation P(x)w = 2 x∘(x∘w) − (x∘x)∘w.
/// For symmetric matrices this equals x w x.
inline JordanElement quadratic_rep_apply(const JordanElement& x, const JordanElement& w) {
  x.require_same(w);
  JordanElement t1 = jordan_product(x, jordan_product(x, w)) * 2.0;
  JordanElement t2 = jordan_product(jordan_product(x, x), w);
  return t1 - t2;
}

/// Extreme eigenvalues of P(x^{-1/2})w; equals (m(w/x), M(w/x)) on the
/// symmetric cone. For the PSD cone the whitening is done with a Cholesky
/// factor of x, which keeps the problem symmetric-definite.
inline std::pair<double, double> lambda_bounds(const JordanElement& w,
                                               const JordanElement& x) {
  w.require_same(x);
  if (!is_interior(x)) throw NotInterior("lambda_bounds requires interior base point");
  if (x.algebra() == AlgebraKind::SymMatrices) {
    Eigen::LLT<Matrix> llt(x.mat());
    if (llt.info() != Eigen::Success)
      throw NotInterior("Cholesky factorization failed; base point not positive definite");
    Matrix l = llt.matrixL();
    Matrix half = l.triangularView<Eigen::Lower>().solve(w.mat());
    Matrix z = l.triangularView<Eigen::Lower>().solve(half.transpose());
    z = 0.5 * (z + z.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(z);
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
  }
  JordanElement xihalf = jordan_pow(x, -0.5);
  JordanElement z = quadratic_rep_apply(xihalf, w);
  return {z.scalar() - z.vec().norm(), z.scalar() + z.vec().norm()};
}

enum class SymmetricMetric { Hilbert, Thompson };

/// Hilbert / Thompson distance on a symmetric cone via Koufany's formula:
/// M(x/y) = λ₊(P(y^{-1/2})x), m(x/y) = λ₋(P(y^{-1/2})x).
inline double symmetric_cone_distance(const JordanElement& x, const JordanElement& y,
                                      SymmetricMetric metric = SymmetricMetric::Hilbert) {
  x.require_same(y);
  if (!is_interior(x) || !is_interior(y))
    throw NotInterior("symmetric_cone_distance requires interior points");
  auto [lo, hi] = lambda_bounds(x, y);
  if (metric == SymmetricMetric::Hilbert) return std::log(hi / lo);
  return std::max(std::log(hi), -std::log(lo));
}

}  // namespace cones
