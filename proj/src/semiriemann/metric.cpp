#include <cmath>
#include <string>

#include "lightlike/semiriemann.hpp"

namespace lightlike {

MetricField::MetricField(CoordinateChart chart, std::vector<Expr> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  const auto d = static_cast<std::size_t>(chart_.dimension());
  if (components_.size() != d * d)
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "metric needs " + std::to_string(d * d) + " components, got " +
                            std::to_string(components_.size()));
  if (chart_.dimension() > Jet2::kMaxDim)
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "chart dimension " + std::to_string(d) + " exceeds the supported " +
                            std::to_string(Jet2::kMaxDim));
}

MetricField MetricField::parse(const CoordinateChart& chart,
                               const std::vector<std::vector<std::string>>& components) {
  const auto d = static_cast<std::size_t>(chart.dimension());
  if (components.size() != d)
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "metric needs " + std::to_string(d) + " rows, got " +
                            std::to_string(components.size()));
  std::vector<Expr> exprs;
  exprs.reserve(d * d);
  for (const auto& row : components) {
    if (row.size() != d)
      throw GeometryError(GeometryErrorKind::DimensionMismatch,
                          "metric row needs " + std::to_string(d) + " entries, got " +
                              std::to_string(row.size()));
    for (const auto& s : row) exprs.push_back(lightlike::parse(s, chart));
  }
  return MetricField(chart, std::move(exprs));
}

bool MetricField::structurally_symmetric() const {
  for (int i = 0; i < dimension(); ++i)
    for (int j = i + 1; j < dimension(); ++j)
      if (!(component(i, j) == component(j, i))) return false;
  return true;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double local_scale(const Matrix& m) { return 1.0 + max_abs(m); }

namespace {

void check_symmetric(const Matrix& g) {
  const double tol = 1e-12 * local_scale(g);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.cols(); ++j)
      if (std::abs(g(i, j) - g(j, i)) > tol)
        throw GeometryError(GeometryErrorKind::AsymmetricMetric,
                            "metric entries (" + std::to_string(i) + "," + std::to_string(j) +
                                ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                ") differ");
}

Matrix invert_checked(const Matrix& g) {
  const double scale = local_scale(g);
  Eigen::FullPivLU<Matrix> lu(g);
  const double det = lu.determinant();
  if (!(std::abs(det) > 1e-10 * std::pow(scale, static_cast<double>(g.rows()))))
    throw GeometryError(GeometryErrorKind::DegenerateMetric,
                        "metric is degenerate (det = " + format_number(det) + ")");
  Matrix inv = lu.inverse();
  inv = 0.5 * (inv + inv.transpose()).eval();
  const double residual =
      max_abs(g * inv - Matrix::Identity(g.rows(), g.cols()));
  if (!(residual < 1e-10 * scale))
    throw GeometryError(GeometryErrorKind::DegenerateMetric,
                        "metric inverse residual " + format_number(residual) + " too large");
  return inv;
}

}  // namespace

MetricSample metric_at(const MetricField& m, std::span<const double> point,
                       std::span<const double> params) {
  const int d = m.dimension();
  if (static_cast<int>(point.size()) != d)
    throw GeometryError(GeometryErrorKind::DimensionMismatch, "point has wrong dimension");
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = evaluate(m.component(i, j), point, params);
  check_symmetric(g);
  g = 0.5 * (g + g.transpose()).eval();
  return {g, invert_checked(g)};
}

Christoffel levi_civita(const Matrix& g_inv, std::span<const Matrix> dg) {
  const int d = static_cast<int>(g_inv.rows());
  Christoffel gamma(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        double sum = 0.0;
        for (int l = 0; l < d; ++l)
          sum += g_inv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        gamma(k, i, j) = 0.5 * sum;
        gamma(k, j, i) = gamma(k, i, j);
      }
    }
  }
  return gamma;
}

PointTensors point_tensors(const MetricField& m, const Expr& F, std::span<const double> point,
                           std::span<const double> params) {
  const int d = m.dimension();
  if (static_cast<int>(point.size()) != d)
    throw GeometryError(GeometryErrorKind::DimensionMismatch, "point has wrong dimension");
  const std::vector<Jet2> x = seed(point);
  const std::span<const Jet2> xs(x);

  PointTensors t;
  t.point = Eigen::Map<const Vector>(point.data(), d);
  t.g.resize(d, d);
  t.dg.assign(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Jet2 gij = evaluate<Jet2>(m.component(i, j), xs, params);
      t.g(i, j) = gij.value();
      for (int l = 0; l < d; ++l) t.dg[l](i, j) = gij.grad(l);
    }
  }
  check_symmetric(t.g);
  t.g = 0.5 * (t.g + t.g.transpose()).eval();
  for (auto& dl : t.dg) dl = 0.5 * (dl + dl.transpose()).eval();
  t.g_inv = invert_checked(t.g);
  t.gamma = levi_civita(t.g_inv, t.dg);

  const Jet2 f = evaluate<Jet2>(F, xs, params);
  t.F = f.value();
  t.dF.resize(d);
  t.d2F.resize(d, d);
  for (int i = 0; i < d; ++i) {
    t.dF(i) = f.grad(i);
    for (int j = 0; j < d; ++j) t.d2F(i, j) = f.hess(i, j);
  }
  t.xi_hat = t.g_inv * t.dF;
  t.norm2 = t.dF.dot(t.xi_hat);
  t.hess.resize(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double h = t.d2F(i, j);
      for (int k = 0; k < d; ++k) h -= t.gamma(k, i, j) * t.dF(k);
      t.hess(i, j) = h;
      t.hess(j, i) = h;
    }
  }
  return t;
}

Christoffel christoffel_at(const MetricField& m, std::span<const double> point,
                           std::span<const double> params) {
  static const CoordinateChart kUnit({"u"});
  static const Expr kZero = parse("0", kUnit);
  // F does not matter here; a constant keeps the evaluation trivial.
  return point_tensors(m, kZero, point, params).gamma;
}

GradientSample gradient_at(const MetricField& m, const Expr& F, std::span<const double> point,
                           std::span<const double> params) {
  PointTensors t = point_tensors(m, F, point, params);
  return {std::move(t.xi_hat), std::move(t.dF), t.norm2};
}

Matrix hessian_at(const MetricField& m, const Expr& F, std::span<const double> point,
                  std::span<const double> params) {
  return point_tensors(m, F, point, params).hess;
}

}  // namespace lightlike
