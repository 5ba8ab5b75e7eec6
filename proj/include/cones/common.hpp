#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cones {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Relative tolerance used to decide whether a facet value is "zero"
/// (boundary) when forming order bounds.
inline constexpr double kRatioTol = 1e-12;

/// Interiority: min eigenvalue / facet value must exceed this times the scale.
inline constexpr double kInteriorTol = 1e-12;

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

struct ConeMismatch : std::invalid_argument {
  ConeMismatch() : std::invalid_argument("points belong to different cones") {}
};

struct ZeroDenominator : std::invalid_argument {
  ZeroDenominator() : std::invalid_argument("denominator point is zero") {}
};

struct NotInterior : std::invalid_argument {
  explicit NotInterior(const std::string& what = "point is not interior")
      : std::invalid_argument(what) {}
};

struct PointsCoincide : std::invalid_argument {
  PointsCoincide() : std::invalid_argument("chord endpoints coincide") {}
};

struct DegeneratePolytope : std::invalid_argument {
  explicit DegeneratePolytope(const std::string& what = "polytope has empty interior")
      : std::invalid_argument(what) {}
};

struct UnboundedDomain : std::invalid_argument {
  explicit UnboundedDomain(const std::string& what = "domain is unbounded")
      : std::invalid_argument(what) {}
};

struct EmptyMatrix : std::invalid_argument {
  EmptyMatrix() : std::invalid_argument("matrix has no entries") {}
};

struct EmptyVector : std::invalid_argument {
  EmptyVector() : std::invalid_argument("vector has no entries") {}
};

struct NegativeDiameter : std::invalid_argument {
  NegativeDiameter() : std::invalid_argument("projective diameter must be >= 0") {}
};

struct NegativeInput : std::invalid_argument {
  NegativeInput() : std::invalid_argument("input must be nonnegative") {}
};

struct AlgebraMismatch : std::invalid_argument {
  AlgebraMismatch() : std::invalid_argument("elements belong to different Jordan algebras") {}
};

struct NotInvertible : std::invalid_argument {
  explicit NotInvertible(const std::string& what = "element is not invertible")
      : std::invalid_argument(what) {}
};

struct HypothesisViolated : std::invalid_argument {
  explicit HypothesisViolated(const std::string& what)
      : std::invalid_argument("hypothesis violated: " + what) {}
};

struct ArgumentTooSmall : std::invalid_argument {
  explicit ArgumentTooSmall(const std::string& what = "argument must be >= 1")
      : std::invalid_argument(what) {}
};

struct NoConvergence : std::runtime_error {
  int iterations;
  explicit NoConvergence(int iters)
      : std::runtime_error("iteration did not converge within " + std::to_string(iters) +
                           " steps"),
        iterations(iters) {}
};

struct EvaluationFailure : std::runtime_error {
  explicit EvaluationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::invalid_argument {
  explicit SchemaError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cones
