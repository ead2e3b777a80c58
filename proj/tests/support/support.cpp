#include "support.hpp"

#include <algorithm>
#include <cstdio>

#include "lightlike/expr.hpp"
#include "lightlike/report.hpp"
#include "lightlike/semiriemann.hpp"

namespace testsupport {

using namespace lightlike;

std::vector<double> central_gradient(const ScalarFn<double>& f, std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x0 = x[i];
    x[i] = x0 + h;
    const double fp = f(x);
    x[i] = x0 - h;
    const double fm = f(x);
    x[i] = x0;
    g[i] = (fp - fm) / (2 * h);
  }
  return g;
}

std::vector<std::vector<double>> central_hessian(const ScalarFn<double>& f, std::vector<double> x,
                                                 double h) {
  const std::size_t d = x.size();
  std::vector<std::vector<double>> H(d, std::vector<double>(d));
  const double f0 = f(x);
  for (std::size_t i = 0; i < d; ++i) {
    const double xi = x[i];
    x[i] = xi + h;
    const double fp = f(x);
    x[i] = xi - h;
    const double fm = f(x);
    x[i] = xi;
    H[i][i] = (fp - 2 * f0 + fm) / (h * h);
    for (std::size_t j = i + 1; j < d; ++j) {
      const double xj = x[j];
      auto at = [&](double si, double sj) {
        x[i] = xi + si * h;
        x[j] = xj + sj * h;
        const double v = f(x);
        x[i] = xi;
        x[j] = xj;
        return v;
      };
      H[i][j] = H[j][i] = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
    }
  }
  return H;
}

std::vector<Matrix> fd_metric_derivative(const MetricFn& g, const std::vector<double>& x,
                                         double h) {
  const std::size_t d = x.size();
  std::vector<Matrix> dg;
  for (std::size_t l = 0; l < d; ++l) {
    auto at = [&](double s) {
      std::vector<double> y = x;
      y[l] += s * h;
      return g(y);
    };
    dg.push_back((at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h));
  }
  return dg;
}

Gamma fd_christoffel(const MetricFn& g, const std::vector<double>& x, double h) {
  const int d = static_cast<int>(x.size());
  const std::vector<Matrix> dg = fd_metric_derivative(g, x, h);
  const Matrix ginv = g(x).inverse();
  Gamma gamma(d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += ginv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        gamma[k][i][j] = 0.5 * s;
      }
  return gamma;
}

Matrix fd_covariant_hessian(const ScalarFn<double>& F, const MetricFn& g,
                            const std::vector<double>& x, double h) {
  const int d = static_cast<int>(x.size());
  const auto d2 = five_point_hessian<double>(F, x, h);
  const auto d1 = five_point_gradient<double>(F, x, h);
  const Gamma gamma = fd_christoffel(g, x, h);
  Matrix H(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = d2[i][j];
      for (int k = 0; k < d; ++k) s -= gamma[k][i][j] * d1[k];
      H(i, j) = s;
    }
  return H;
}

MetricFn metric_fn(const MongeGenerator& gen) {
  return [&gen](const std::vector<double>& x) { return metric_at(gen.metric(), x, gen.params()).g; };
}

ScalarFn<double> scalar_fn(const MongeGenerator& gen) {
  return [&gen](const std::vector<double>& x) {
    return evaluate(gen.scalar_field(), std::span<const double>(x), gen.params());
  };
}

Vector fd_ambient_derivative(const MongeGenerator& gen, const std::vector<double>& x, int i, int j,
                             double h) {
  const int d = static_cast<int>(x.size());
  const auto d2 = five_point_hessian<double>(scalar_fn(gen), x, h);
  const Gamma gamma = fd_christoffel(metric_fn(gen), x, h);
  Vector out(d + 1);
  out(0) = d2[i][j];
  for (int k = 0; k < d; ++k) out(k + 1) = gamma[k][i][j];
  return out;
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

namespace {

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

std::string constant(Rng& rng, double lo, double hi) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", uniform(rng, lo, hi));
  return buf;
}

}  // namespace

std::string random_smooth_expr(Rng& rng, const std::vector<std::string>& names, int depth) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    if (pick(rng, 3) == 0) return constant(rng, 0.25, 1.5);
    return names[pick(rng, static_cast<int>(names.size()))];
  }
  auto sub = [&] { return random_smooth_expr(rng, names, depth - 1); };
  switch (pick(rng, 15)) {
    case 0: return "(" + sub() + " + " + sub() + ")";
    case 1: return "(" + sub() + " - " + sub() + ")";
    case 2: return "(" + sub() + ")*(" + sub() + ")";
    case 3: return "(" + sub() + ")/(2 + cos(" + sub() + "))";
    case 4: return "sin(" + sub() + ")";
    case 5: return "cos(" + sub() + ")";
    case 6: return "exp(sin(" + sub() + "))";
    case 7: return "sqrt(1.5 + sin(" + sub() + "))";
    case 8: return "ln(2 + cos(" + sub() + "))";
    case 9: return "tan(sin(" + sub() + ")/2)";
    case 10: return "abs(2 + sin(" + sub() + "))";
    case 11: return "-(" + sub() + ")";
    case 12: return "(" + sub() + ")^2";
    case 13: return "(sin(" + sub() + "))^3";
    default: return "(2 + sin(" + sub() + "))^(cos(" + sub() + "))";
  }
}

std::string random_syntax_expr(Rng& rng, const std::vector<std::string>& names, int depth) {
  if (depth <= 0 || pick(rng, 5) == 0) {
    switch (pick(rng, 6)) {
      case 0: return constant(rng, 0.0, 10.0);
      case 1: return std::to_string(pick(rng, 20));
      case 2: return pick(rng, 2) ? "pi" : "e";
      case 3: return "1e-3";
      default: return names[pick(rng, static_cast<int>(names.size()))];
    }
  }
  auto sub = [&] { return random_syntax_expr(rng, names, depth - 1); };
  static const char* fns[] = {"sin", "cos", "tan", "exp", "ln", "sqrt", "abs"};
  std::string s;
  switch (pick(rng, 9)) {
    case 0: s = sub() + " + " + sub(); break;
    case 1: s = sub() + "-" + sub(); break;
    case 2: s = sub() + "*" + sub(); break;
    case 3: s = sub() + " / " + sub(); break;
    case 4: s = sub() + "^" + sub(); break;
    case 5: s = "-" + sub(); break;
    case 6: s = std::string(fns[pick(rng, 7)]) + "(" + sub() + ")"; break;
    case 7: s = sub() + "^-" + sub(); break;
    default: s = "(" + sub() + ")"; break;
  }
  if (pick(rng, 3) == 0) s = "(" + s + ")";
  return s;
}

std::vector<double> random_admissible_point(Rng& rng, const CatalogEntry& entry) {
  const MongeGenerator& gen = entry.generator;
  const SampleSpec& spec = entry.default_samples;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> x(gen.dimension());
    for (int i = 0; i < gen.dimension(); ++i) {
      auto [lo, hi] = spec.ranges[i];
      if (hi == lo) hi = lo + 1.0;
      x[i] = uniform(rng, lo, hi);
    }
    if (gen.check(x).admissible) return x;
  }
  throw std::runtime_error("no admissible point found");
}

Matrix random_signature_preserving(Rng& rng, const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size());
  Matrix L = Matrix::Identity(n, n);
  if (n == 1) {
    if (pick(rng, 2)) L(0, 0) = -1.0;
    return L;
  }
  for (int step = 0; step < 3 * n; ++step) {
    const int a = pick(rng, n);
    int b = pick(rng, n - 1);
    if (b >= a) ++b;
    Matrix R = Matrix::Identity(n, n);
    if (signs[a] == signs[b]) {
      const double t = uniform(rng, -3.2, 3.2);
      R(a, a) = std::cos(t);
      R(a, b) = -std::sin(t);
      R(b, a) = std::sin(t);
      R(b, b) = std::cos(t);
    } else {
      const double phi = uniform(rng, -1.5, 1.5);
      R(a, a) = R(b, b) = std::cosh(phi);
      R(a, b) = R(b, a) = std::sinh(phi);
    }
    L = L * R;
  }
  if (pick(rng, 2)) L.col(pick(rng, n)) *= -1.0;
  return L;
}

MongeGenerator make_generator(const std::string& name, const std::vector<std::string>& coords,
                              const std::vector<std::pair<std::string, double>>& params,
                              const std::vector<std::vector<std::string>>& metric,
                              const std::string& F, const std::vector<std::string>& constraints) {
  CoordinateChart chart(coords, params);
  std::vector<DomainConstraint> cs;
  for (const auto& c : constraints) cs.push_back(parse_constraint(c, chart));
  return MongeGenerator(name, MetricField::parse(chart, metric), parse(F, chart), std::move(cs));
}

MongeGenerator euclidean(int d, const std::string& F, const std::vector<std::string>& constraints) {
  std::vector<std::string> coords;
  std::vector<std::vector<std::string>> metric(d, std::vector<std::string>(d, "0"));
  for (int i = 0; i < d; ++i) {
    coords.push_back("x" + std::to_string(i + 1));
    metric[i][i] = "1";
  }
  return make_generator("euclid", coords, {}, metric, F, constraints);
}

SurfacePoint lift(const MongeGenerator& gen, std::vector<double> base) {
  return lightlike::lift(gen, base);
}

double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }
double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::vector<std::string> degenerate_builtins() {
  std::vector<std::string> names;
  for (const auto& l : list_builtins())
    if (builtin(l.name).expected.degenerate) names.push_back(l.name);
  return names;
}

}  // namespace testsupport
