#include <cmath>
#include <string>

#include "local.hpp"

namespace lightlike {

namespace detail {

LocalFrame local_frame(const MongeGenerator& gen, std::span<const double> base,
                       double xi_scale) {
  if (xi_scale == 0.0 || !std::isfinite(xi_scale))
    throw GeometryError(GeometryErrorKind::Unsupported, "xi scale must be finite and nonzero");
  LocalFrame f;
  f.t = point_tensors(gen.metric(), gen.scalar_field(), base, gen.params());
  f.d = gen.dimension();
  f.c = xi_scale;
  const int d = f.d;
  f.gbar = Matrix::Zero(d + 1, d + 1);
  f.gbar(0, 0) = -1.0;
  f.gbar.bottomRightCorner(d, d) = f.t.g;

  f.xi.resize(d + 1);
  f.xi(0) = 1.0;
  f.xi.tail(d) = f.t.xi_hat;
  f.xi *= xi_scale;

  f.n.resize(d + 1);
  f.n(0) = -0.5;
  f.n.tail(d) = 0.5 * f.t.xi_hat;
  f.n /= xi_scale;

  f.e.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Vector ei = Vector::Zero(d + 1);
    ei(0) = f.t.dF(i);
    ei(i + 1) = 1.0;
    f.e.push_back(std::move(ei));
  }
  f.scale = 1.0 + max_abs(f.t.g) + max_abs(f.t.dF * f.t.dF.transpose());
  return f;
}

Vector connection_e_e(const LocalFrame& f, int i, int j) {
  Vector out(f.d + 1);
  out(0) = f.t.d2F(i, j);
  for (int k = 0; k < f.d; ++k) out(k + 1) = f.t.gamma(k, i, j);
  return out;
}

Vector connection_e_n(const LocalFrame& f, int i) {
  // N = (-1/2, xi^/2)/c with x0-independent components and d/dx0 parallel,
  // so only the covariant derivative of xi^ along d_i survives.
  const PointTensors& t = f.t;
  const Vector d_xi = -t.g_inv * (t.dg[i] * t.xi_hat) + t.g_inv * t.d2F.col(i);
  Vector out = Vector::Zero(f.d + 1);
  for (int k = 0; k < f.d; ++k) {
    double v = d_xi(k);
    for (int l = 0; l < f.d; ++l) v += t.gamma(k, i, l) * t.xi_hat(l);
    out(k + 1) = v / (2.0 * f.c);
  }
  return out;
}

}  // namespace detail

using detail::ambient_dot;
using detail::LocalFrame;
using detail::local_frame;

namespace {

std::span<const double> base_of(const SurfacePoint& p) {
  return {p.base.data(), static_cast<std::size_t>(p.base.size())};
}

void check_index(const LocalFrame& f, int i) {
  if (i < 0 || i >= f.d)
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "frame index " + std::to_string(i) + " out of range");
}

int radical_rank_of(const Matrix& induced_g, double tol) {
  Eigen::JacobiSVD<Matrix> svd(induced_g);
  const double threshold = tol * local_scale(induced_g);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) < threshold) ++rank;
  return rank;
}

Matrix induced_metric(const LocalFrame& f) {
  Matrix out(f.d, f.d);
  for (int i = 0; i < f.d; ++i)
    for (int j = 0; j < f.d; ++j) out(i, j) = ambient_dot(f.gbar, f.e[i], f.e[j]);
  return out;
}

Matrix second_form(const LocalFrame& f) { return -f.c * f.t.hess; }

OrthoFrame screen_of(const LocalFrame& f) {
  if (f.d < 2)
    throw GeometryError(GeometryErrorKind::Unsupported, "the screen of a d = 1 generator is empty");
  std::vector<Vector> s;
  s.reserve(static_cast<std::size_t>(f.d));
  for (int i = 0; i < f.d; ++i) s.push_back(f.e[i] - ambient_dot(f.gbar, f.e[i], f.n) * f.xi);
  // sum_i xi^_i s_i = 0; drop the vector carrying the largest coefficient.
  Eigen::Index drop = 0;
  f.t.xi_hat.cwiseAbs().maxCoeff(&drop);
  s.erase(s.begin() + drop);
  try {
    return orthonormalize(s, f.gbar);
  } catch (const GeometryError& e) {
    if (e.kind() != GeometryErrorKind::NearNullPivot) throw;
    throw GeometryError(GeometryErrorKind::RankDeficient,
                        std::string("screen projection has rank below d-1: ") + e.what());
  }
}

GaussDecomposition gauss_of(const LocalFrame& f, const Matrix& B, int i, int j, double tol) {
  GaussDecomposition out;
  out.ambient_derivative = detail::connection_e_e(f, i, j);
  out.b_coeff = B(i, j);
  out.tangent_part = out.ambient_derivative - out.b_coeff * f.n;
  out.tangency = std::abs(ambient_dot(f.gbar, out.tangent_part, f.xi));
  if (!(out.tangency < tol * f.scale))
    throw GeometryError(GeometryErrorKind::CertificateFailed,
                        "tangent part of the Gauss split is not orthogonal to xi (" +
                            format_number(out.tangency) + "); is the generator lightlike here?");
  return out;
}

WeingartenDecomposition weingarten_of(const LocalFrame& f, int i, double tol) {
  WeingartenDecomposition out;
  out.ambient_derivative = detail::connection_e_n(f, i);
  out.tau = ambient_dot(f.gbar, out.ambient_derivative, f.xi);
  out.shape = -(out.ambient_derivative - out.tau * f.n);
  out.tangency = std::abs(ambient_dot(f.gbar, out.shape, f.xi));
  if (!(out.tangency < tol * f.scale))
    throw GeometryError(GeometryErrorKind::CertificateFailed,
                        "shape operator image is not orthogonal to xi (" +
                            format_number(out.tangency) + "); is the generator lightlike here?");
  return out;
}

}  // namespace

Matrix ambient_metric_at(const MongeGenerator& gen, const SurfacePoint& p) {
  const MetricSample m = metric_at(gen.metric(), base_of(p), gen.params());
  const auto d = m.g.rows();
  Matrix out = Matrix::Zero(d + 1, d + 1);
  out(0, 0) = -1.0;
  out.bottomRightCorner(d, d) = m.g;
  return out;
}

NormalPair normal_and_transversal_at(const MongeGenerator& gen, const SurfacePoint& p,
                                     double xi_scale) {
  LocalFrame f = local_frame(gen, base_of(p), xi_scale);
  return {std::move(f.xi), std::move(f.n)};
}

double lightlike_defect_at(const MongeGenerator& gen, const SurfacePoint& p) {
  return gradient_at(gen.metric(), gen.scalar_field(), base_of(p), gen.params()).norm2 - 1.0;
}

MongeFrame monge_frame_at(const MongeGenerator& gen, const SurfacePoint& p,
                          const Tolerances& tol) {
  LocalFrame f = local_frame(gen, base_of(p), 1.0);
  MongeFrame out;
  out.induced_g = induced_metric(f);
  out.radical_rank = radical_rank_of(out.induced_g, tol.tol);
  out.e = std::move(f.e);
  return out;
}

Matrix second_fundamental_form_at(const MongeGenerator& gen, const SurfacePoint& p,
                                  double xi_scale) {
  return second_form(local_frame(gen, base_of(p), xi_scale));
}

UmbilicFit umbilic_fit(const Matrix& hess, const Matrix& t) {
  const double tt = t.squaredNorm();
  if (!(max_abs(t) > 1e-12 * (1.0 + max_abs(hess))))
    throw GeometryError(GeometryErrorKind::IllPosedFit,
                        "dF (x) dF - g vanishes; the umbilical factor is undetermined");
  UmbilicFit fit;
  fit.rho = (hess.array() * t.array()).sum() / tt;
  fit.residual = max_abs(hess - fit.rho * t) / (1.0 + max_abs(hess) + max_abs(t));
  return fit;
}

UmbilicFit umbilic_fit_at(const MongeGenerator& gen, const SurfacePoint& p) {
  const PointTensors t = point_tensors(gen.metric(), gen.scalar_field(), base_of(p), gen.params());
  return umbilic_fit(t.hess, t.dF * t.dF.transpose() - t.g);
}

OrthoFrame kernel_frame(const Vector& dF, const Matrix& g) {
  const auto d = dF.size();
  std::vector<Vector> basis;
  Eigen::Index pivot = 0;
  const double largest = dF.cwiseAbs().maxCoeff(&pivot);
  for (Eigen::Index j = 0; j < d; ++j) {
    if (largest > 0.0 && j == pivot) continue;
    Vector v = Vector::Zero(d);
    v(j) = 1.0;
    if (largest > 0.0) v(pivot) = -dF(j) / dF(pivot);
    basis.push_back(std::move(v));
  }
  return orthonormalize(basis, g);
}

double minimal_defect_with_frame(const Matrix& hess, const OrthoFrame& frame) {
  double sum = 0.0;
  for (std::size_t a = 0; a < frame.vectors.size(); ++a)
    sum += frame.signs[a] * frame.vectors[a].dot(hess * frame.vectors[a]);
  return sum;
}

double minimal_defect_at(const MongeGenerator& gen, const SurfacePoint& p) {
  if (gen.dimension() < 2)
    throw GeometryError(GeometryErrorKind::Unsupported, "ker dF is trivial for d = 1");
  const PointTensors t = point_tensors(gen.metric(), gen.scalar_field(), base_of(p), gen.params());
  return minimal_defect_with_frame(t.hess, kernel_frame(t.dF, t.g));
}

OrthoFrame screen_frame_at(const MongeGenerator& gen, const SurfacePoint& p) {
  return screen_of(local_frame(gen, base_of(p), 1.0));
}

GaussDecomposition gauss_decompose_at(const MongeGenerator& gen, const SurfacePoint& p, int i,
                                      int j, const AnalysisOptions& options) {
  const LocalFrame f = local_frame(gen, base_of(p), options.xi_scale);
  check_index(f, i);
  check_index(f, j);
  return gauss_of(f, second_form(f), i, j, options.tolerances.tol);
}

WeingartenDecomposition weingarten_at(const MongeGenerator& gen, const SurfacePoint& p, int i,
                                      const AnalysisOptions& options) {
  const LocalFrame f = local_frame(gen, base_of(p), options.xi_scale);
  check_index(f, i);
  return weingarten_of(f, i, options.tolerances.tol);
}

PointAnalysis analyze_point(const MongeGenerator& gen, const SurfacePoint& p,
                            const AnalysisOptions& options) {
  const double tol = options.tolerances.tol;
  const LocalFrame f = local_frame(gen, base_of(p), options.xi_scale);
  const int d = f.d;

  PointAnalysis a;
  a.point = p;
  a.xi = f.xi;
  a.n_xi = f.n;
  a.frame_e = f.e;
  a.induced_g = induced_metric(f);
  a.radical_rank = radical_rank_of(a.induced_g, tol);
  a.hess = f.t.hess;
  a.B = second_form(f);
  a.scale = f.scale;
  a.lightlike_defect = f.t.norm2 - 1.0;
  a.lightlike = std::abs(a.lightlike_defect) < tol;

  Certificates& cert = a.certificates;
  cert.xi_n = std::abs(ambient_dot(f.gbar, f.xi, f.n) - 1.0);
  cert.n_n = std::abs(ambient_dot(f.gbar, f.n, f.n));
  cert.xi_xi = std::abs(ambient_dot(f.gbar, f.xi, f.xi));
  for (const auto& ei : f.e)
    cert.normality = std::max(cert.normality, std::abs(ambient_dot(f.gbar, f.xi, ei)));

  if (d >= 2) {
    // Umbilic fit of B' = rho' g; for xi_scale = 1 this is Hess = rho (dF dF - g).
    a.umbilic = umbilic_fit(-a.B, -a.induced_g);
    // -B' = c Hess, so this is c times the eps-trace of Hess over ker dF.
    a.minimal_defect = minimal_defect_with_frame(-a.B, kernel_frame(f.t.dF, f.t.g));
  }

  if (a.lightlike) {
    a.tau = Vector::Zero(d);
    a.shape_op = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const GaussDecomposition g = gauss_of(f, a.B, i, j, tol);
        cert.gauss_tangency = std::max(cert.gauss_tangency, g.tangency);
      }
      const WeingartenDecomposition w = weingarten_of(f, i, tol);
      cert.weingarten_tangency = std::max(cert.weingarten_tangency, w.tangency);
      a.tau(i) = w.tau;
      a.shape_op.row(i) = w.shape.tail(d).transpose();
    }
    if (d >= 2) {
      a.screen = screen_of(f);
      for (std::size_t s = 0; s < a.screen->vectors.size(); ++s) {
        const Vector& W = a.screen->vectors[s];
        cert.screen_n = std::max(cert.screen_n, std::abs(ambient_dot(f.gbar, W, f.n)));
        cert.screen_xi = std::max(cert.screen_xi, std::abs(ambient_dot(f.gbar, W, f.xi)));
        cert.screen_x0 = std::max(cert.screen_x0, std::abs(W(0)));
        for (std::size_t r = 0; r < a.screen->vectors.size(); ++r) {
          const double want = r == s ? a.screen->signs[s] : 0.0;
          cert.screen_ortho = std::max(
              cert.screen_ortho,
              std::abs(ambient_dot(f.gbar, W, a.screen->vectors[r]) - want));
        }
      }
      a.integrability_defect = screen_integrability_defect_at(gen, p, options);
    }
  }
  return a;
}

}  // namespace lightlike
