#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lightlike/expr.hpp"

namespace lightlike {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Metric on the base manifold given as a full d x d matrix of expressions.
/// Symmetry is checked pointwise whenever the metric is evaluated.
class MetricField {
 public:
  /// `components` is row-major, d*d entries. Throws GeometryError
  /// (DimensionMismatch) on a wrong count or when d exceeds the jet capacity.
  MetricField(CoordinateChart chart, std::vector<Expr> components);

  /// Parses a d x d array of expression strings against `chart`.
  static MetricField parse(const CoordinateChart& chart,
                           const std::vector<std::vector<std::string>>& components);

  int dimension() const { return chart_.dimension(); }
  const CoordinateChart& chart() const { return chart_; }
  const Expr& component(int i, int j) const { return components_[i * dimension() + j]; }

  /// True when entry (i, j) and (j, i) have structurally equal ASTs for all i, j.
  bool structurally_symmetric() const;

  friend bool operator==(const MetricField&, const MetricField&) = default;

 private:
  CoordinateChart chart_;
  std::vector<Expr> components_;
};

/// Local scale used for relative tolerances: 1 + max |entry|.
double local_scale(const Matrix& m);
double max_abs(const Matrix& m);

struct MetricSample {
  Matrix g;
  Matrix g_inv;
};

/// Evaluates the metric and its inverse. Throws GeometryError
/// (AsymmetricMetric / DegenerateMetric) or DomainError.
MetricSample metric_at(const MetricField& m, std::span<const double> point,
                       std::span<const double> params);

/// Christoffel symbols of the second kind, Gamma^k_ij, symmetric in (i, j).
class Christoffel {
 public:
  explicit Christoffel(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

  int dimension() const { return dim_; }
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }
  double& operator()(int k, int i, int j) { return data_[index(k, i, j)]; }

 private:
  std::size_t index(int k, int i, int j) const {
    return static_cast<std::size_t>((k * dim_ + i) * dim_ + j);
  }
  int dim_;
  std::vector<double> data_;
};

/// Levi-Civita formula from the inverse metric and first derivatives
/// dg[l](i, j) = d_l g_ij. Symmetric in the lower indices by construction.
Christoffel levi_civita(const Matrix& g_inv, std::span<const Matrix> dg);

Christoffel christoffel_at(const MetricField& m, std::span<const double> point,
                           std::span<const double> params);

struct GradientSample {
  Vector xi_hat;  ///< raised gradient g^ij d_j F
  Vector dF;      ///< differential d_i F
  double norm2;   ///< g(xi_hat, xi_hat)
};

GradientSample gradient_at(const MetricField& m, const Expr& F, std::span<const double> point,
                           std::span<const double> params);

/// Covariant Hessian Hess_ij = d_i d_j F - Gamma^k_ij d_k F.
Matrix hessian_at(const MetricField& m, const Expr& F, std::span<const double> point,
                  std::span<const double> params);

/// Everything the pointwise kernels need, from a single jet evaluation of the
/// metric components and of F.
struct PointTensors {
  Vector point;
  Matrix g;
  Matrix g_inv;
  std::vector<Matrix> dg;  ///< dg[l](i, j) = d_l g_ij
  Christoffel gamma{1};
  double F = 0.0;
  Vector dF;
  Matrix d2F;  ///< coordinate second derivatives
  Vector xi_hat;
  double norm2 = 0.0;
  Matrix hess;  ///< covariant Hessian
};

PointTensors point_tensors(const MetricField& m, const Expr& F, std::span<const double> point,
                           std::span<const double> params);

/// Vectors v_i with g(v_i, v_j) = signs_i delta_ij, signs_i in {-1, +1}.
struct OrthoFrame {
  std::vector<Vector> vectors;
  std::vector<int> signs;
};

/// Gram-Schmidt for an indefinite metric with greedy pivoting: each step takes
/// the remaining vector whose (projected) self-product has the largest
/// magnitude. Throws GeometryError(NearNullPivot) when every candidate has
/// |g(v, v)| < 1e-10 * scale, scale = 1 + max |Gram matrix entry| of the inputs.
OrthoFrame orthonormalize(std::span<const Vector> vectors, const Matrix& metric);

}  // namespace lightlike
