#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lightlike/catalog.hpp"
#include "lightlike/monge.hpp"

namespace testsupport {

using lightlike::Matrix;
using lightlike::Vector;

// ---------------------------------------------------------------------------
// Finite-difference oracles. Nothing here touches jets.

template <class T>
using ScalarFn = std::function<T(const std::vector<T>&)>;

/// Second-order central differences (the step the AD cross-check uses).
std::vector<double> central_gradient(const ScalarFn<double>& f, std::vector<double> x, double h);
std::vector<std::vector<double>> central_hessian(const ScalarFn<double>& f, std::vector<double> x,
                                                 double h);

/// Fourth-order five-point stencils; used where the oracle itself must be
/// accurate to ~1e-10.
template <class T>
std::vector<T> five_point_gradient(const ScalarFn<T>& f, std::vector<T> x, T h) {
  std::vector<T> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const T x0 = x[i];
    auto at = [&](T s) {
      x[i] = x0 + s * h;
      return f(x);
    };
    g[i] = (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
    x[i] = x0;
  }
  return g;
}

template <class T>
std::vector<std::vector<T>> five_point_hessian(const ScalarFn<T>& f, std::vector<T> x, T h) {
  const std::size_t d = x.size();
  std::vector<std::vector<T>> H(d, std::vector<T>(d));
  for (std::size_t j = 0; j < d; ++j) {
    ScalarFn<T> dj = [&, j](const std::vector<T>& y) {
      std::vector<T> z = y;
      const T z0 = z[j];
      auto at = [&](T s) {
        z[j] = z0 + s * h;
        return f(z);
      };
      return (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
    };
    const std::vector<T> row = five_point_gradient(dj, x, h);
    for (std::size_t i = 0; i < d; ++i) H[i][j] = row[i];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) H[i][j] = H[j][i] = (H[i][j] + H[j][i]) / 2;
  return H;
}

using MetricFn = std::function<Matrix(const std::vector<double>&)>;

/// gamma[k][i][j] from the Levi-Civita formula with five-point metric
/// derivatives.
using Gamma = std::vector<std::vector<std::vector<double>>>;
Gamma fd_christoffel(const MetricFn& g, const std::vector<double>& x, double h = 1e-3);

/// d_l g_ij by five-point differences: result[l](i, j).
std::vector<Matrix> fd_metric_derivative(const MetricFn& g, const std::vector<double>& x,
                                         double h = 1e-3);

/// Hess_ij = d_i d_j F - Gamma^k_ij d_k F from differences only.
Matrix fd_covariant_hessian(const ScalarFn<double>& F, const MetricFn& g,
                            const std::vector<double>& x, double h = 1e-3);

/// Plain-double views of a generator's metric and scalar field.
MetricFn metric_fn(const lightlike::MongeGenerator& gen);
ScalarFn<double> scalar_fn(const lightlike::MongeGenerator& gen);

/// Ambient derivative of e_j along e_i from differences:
/// (d_i d_j F, Gamma^k_ij).
Vector fd_ambient_derivative(const lightlike::MongeGenerator& gen, const std::vector<double>& x,
                             int i, int j, double h = 1e-3);

// ---------------------------------------------------------------------------
// Random inputs.

using Rng = std::mt19937_64;

/// Expression over `names` that is smooth and inside every domain for
/// coordinates in [-1.5, 1.5] and parameters in [0.5, 2].
std::string random_smooth_expr(Rng& rng, const std::vector<std::string>& names, int depth);

/// Any grammar-valid expression (not necessarily evaluable): exercises
/// precedence, unary minus, right-associative powers and redundant parens.
std::string random_syntax_expr(Rng& rng, const std::vector<std::string>& names, int depth);

double uniform(Rng& rng, double lo, double hi);

/// Random base point inside an entry's default sample box that passes its
/// domain constraints.
std::vector<double> random_admissible_point(Rng& rng, const lightlike::CatalogEntry& entry);

/// Random Lambda with Lambda^T diag(signs) Lambda = diag(signs): products of
/// rotations (equal signs) and boosts (opposite signs).
Matrix random_signature_preserving(Rng& rng, const std::vector<int>& signs);

// ---------------------------------------------------------------------------

lightlike::MongeGenerator make_generator(const std::string& name,
                                         const std::vector<std::string>& coords,
                                         const std::vector<std::pair<std::string, double>>& params,
                                         const std::vector<std::vector<std::string>>& metric,
                                         const std::string& F,
                                         const std::vector<std::string>& constraints = {});

/// Euclidean metric on coordinates x1..xd with scalar field F.
lightlike::MongeGenerator euclidean(int d, const std::string& F,
                                    const std::vector<std::string>& constraints = {});

lightlike::SurfacePoint lift(const lightlike::MongeGenerator& gen, std::vector<double> base);

double max_abs_diff(const Vector& a, const Vector& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Names of all catalog entries whose expected verdicts say "degenerate".
std::vector<std::string> degenerate_builtins();

}  // namespace testsupport
