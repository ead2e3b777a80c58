#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lightlike/semiriemann.hpp"

namespace lightlike {

/// A generator (base manifold chart, metric g^, scalar field F) of the graph
/// hypersurface M = {(x0, p) : x0 = F(p)} inside R x M^ with metric
/// -dx0^2 + g^.
///
/// Ambient vectors have d+1 components: slot 0 is the x0 direction, slots
/// 1..d are the lifted base components.
class MongeGenerator {
 public:
  MongeGenerator(std::string name, MetricField metric, Expr scalar_field,
                 std::vector<DomainConstraint> constraints = {});

  const std::string& name() const { return name_; }
  const CoordinateChart& chart() const { return metric_.chart(); }
  const MetricField& metric() const { return metric_; }
  const Expr& scalar_field() const { return scalar_field_; }
  const std::vector<DomainConstraint>& constraints() const { return constraints_; }
  /// Parameter environment, resolved once at construction.
  std::span<const double> params() const { return params_; }
  int dimension() const { return metric_.dimension(); }

  DomainCheck check(std::span<const double> base) const;

  friend bool operator==(const MongeGenerator& a, const MongeGenerator& b) {
    return a.name_ == b.name_ && a.metric_ == b.metric_ &&
           a.scalar_field_ == b.scalar_field_ && a.constraints_ == b.constraints_;
  }

 private:
  std::string name_;
  MetricField metric_;
  Expr scalar_field_;
  std::vector<DomainConstraint> constraints_;
  std::vector<double> params_;
};

/// A point (F(p), p) of the hypersurface.
struct SurfacePoint {
  Vector base;
  double x0 = 0.0;
};

/// Builds the surface point over `base`. Throws DomainError when the base
/// point violates the generator's domain constraints.
SurfacePoint lift(const MongeGenerator& gen, std::span<const double> base);

struct Tolerances {
  double tol = 1e-8;
};

/// Options shared by the pointwise analysis and classify.
struct AnalysisOptions {
  Tolerances tolerances;
  /// Rescales the null normal: xi' = c xi, N' = N / c. Used to check that
  /// verdicts do not depend on the normalisation of xi.
  double xi_scale = 1.0;
  /// Finite-difference step of the screen Lie-bracket test.
  double bracket_step = 1e-5;
  /// Worker threads for classify; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// ---------------------------------------------------------------------------
// Pointwise operations. Each evaluates the generator's jets once at p.

/// diag(-1, g^) at p.
Matrix ambient_metric_at(const MongeGenerator& gen, const SurfacePoint& p);

struct NormalPair {
  Vector xi;    ///< c (1, xi^)
  Vector n_xi;  ///< (-1/2, xi^/2) / c
};

NormalPair normal_and_transversal_at(const MongeGenerator& gen, const SurfacePoint& p,
                                     double xi_scale = 1.0);

/// g^(xi^, xi^) - 1; zero exactly when M is lightlike at p.
double lightlike_defect_at(const MongeGenerator& gen, const SurfacePoint& p);

struct MongeFrame {
  std::vector<Vector> e;  ///< e_i = (d_i F, unit_i)
  Matrix induced_g;       ///< g(e_i, e_j) = -F_i F_j + g^_ij
  int radical_rank = 0;   ///< singular values of induced_g below tol * scale
};

MongeFrame monge_frame_at(const MongeGenerator& gen, const SurfacePoint& p,
                          const Tolerances& tol = {});

/// B(e_i, e_j) = -c Hess(F)_ij for xi' = c xi.
Matrix second_fundamental_form_at(const MongeGenerator& gen, const SurfacePoint& p,
                                  double xi_scale = 1.0);

struct UmbilicFit {
  double rho = 0.0;
  double residual = 0.0;
};

/// Least-squares fit Hess(F) ~ rho (dF (x) dF - g^) in the Frobenius inner
/// product. residual = max|Hess - rho T| / (1 + max|Hess| + max|T|).
/// Throws GeometryError(IllPosedFit) when T vanishes.
UmbilicFit umbilic_fit_at(const MongeGenerator& gen, const SurfacePoint& p);
UmbilicFit umbilic_fit(const Matrix& hess, const Matrix& dF_outer_minus_g);

/// Orthonormal frame of ker dF under g^ (pivot-column elimination, then
/// pivoted Gram-Schmidt).
OrthoFrame kernel_frame(const Vector& dF, const Matrix& g);

/// sum_i eps_i Hess(E_i, E_i) over the given frame.
double minimal_defect_with_frame(const Matrix& hess, const OrthoFrame& frame);

/// sum_i eps_i Hess(E_i, E_i) over an orthonormal frame of ker dF.
/// Throws GeometryError(Unsupported) for d = 1.
double minimal_defect_at(const MongeGenerator& gen, const SurfacePoint& p);

/// Canonical screen: d-1 ambient vectors orthogonal to xi and to d/dx0,
/// orthonormal under the ambient metric.
OrthoFrame screen_frame_at(const MongeGenerator& gen, const SurfacePoint& p);

struct GaussDecomposition {
  Vector ambient_derivative;  ///< ambient covariant derivative of e_j along e_i
  Vector tangent_part;        ///< induced connection term
  double b_coeff = 0.0;       ///< B(e_i, e_j)
  double tangency = 0.0;      ///< |g(tangent_part, xi)|
};

/// Splits the ambient derivative of e_j along e_i into a tangent part and
/// B(i, j) N. Throws GeometryError(CertificateFailed) if the tangent part is
/// not orthogonal to xi within the tolerance.
GaussDecomposition gauss_decompose_at(const MongeGenerator& gen, const SurfacePoint& p, int i,
                                      int j, const AnalysisOptions& options = {});

struct WeingartenDecomposition {
  Vector ambient_derivative;  ///< ambient derivative of N along e_i
  Vector shape;               ///< A_N e_i
  double tau = 0.0;           ///< transversal connection form tau(e_i)
  double tangency = 0.0;      ///< |g(A_N e_i, xi)|
};

WeingartenDecomposition weingarten_at(const MongeGenerator& gen, const SurfacePoint& p, int i,
                                      const AnalysisOptions& options = {});

/// Largest |x0-component| + |g([s_a, s_b], N)| over pairs of screen fields
/// s_a = e_a - g(e_a, N) xi, brackets by central differences. 0 for d <= 2.
double screen_integrability_defect_at(const MongeGenerator& gen, const SurfacePoint& p,
                                      const AnalysisOptions& options = {});

// ---------------------------------------------------------------------------

struct Certificates {
  double xi_n = 0.0;           ///< |g(xi, N) - 1|
  double n_n = 0.0;            ///< |g(N, N)|
  double xi_xi = 0.0;          ///< |g(xi, xi)|
  double normality = 0.0;      ///< max_i |g(xi, e_i)|
  double screen_n = 0.0;       ///< max_j |g(W_j, N)|
  double screen_xi = 0.0;      ///< max_j |g(W_j, xi)|
  double screen_x0 = 0.0;      ///< max_j |x0-component of W_j|
  double screen_ortho = 0.0;   ///< max |g(W_a, W_b) - eps_a delta_ab|
  double gauss_tangency = 0.0;
  double weingarten_tangency = 0.0;
};

/// All induced objects at one surface point.
struct PointAnalysis {
  SurfacePoint point;
  Vector xi;
  Vector n_xi;
  std::vector<Vector> frame_e;
  Matrix induced_g;
  int radical_rank = 0;
  Matrix hess;
  Matrix B;
  double scale = 1.0;  ///< 1 + max|g^_ij| + max|F_i F_j|
  double lightlike_defect = 0.0;
  bool lightlike = false;
  std::optional<UmbilicFit> umbilic;      ///< absent for d = 1
  std::optional<double> minimal_defect;   ///< absent for d = 1
  std::optional<OrthoFrame> screen;       ///< lightlike points with d >= 2
  std::optional<double> integrability_defect;
  Vector tau;       ///< tau(e_i), lightlike points only
  Matrix shape_op;  ///< row i: A_N e_i in e-frame coefficients, lightlike points only
  Certificates certificates;
};

PointAnalysis analyze_point(const MongeGenerator& gen, const SurfacePoint& p,
                            const AnalysisOptions& options = {});

enum class VerdictState { True, False, NotApplicable, Indeterminate };

std::string_view to_string(VerdictState s);

struct Verdict {
  VerdictState state = VerdictState::NotApplicable;
  /// Worst normalised value (the quantity compared against tol) and the
  /// index of the point where it occurs; -1 when there is no witness.
  double worst = 0.0;
  int witness = -1;
};

struct PointResult {
  int index = 0;
  SurfacePoint point;
  std::optional<PointAnalysis> analysis;
  std::string error;  ///< non-empty when the point failed
};

struct ClassificationReport {
  std::string generator;
  std::vector<CoordinateChart::Parameter> parameters;
  double tol = 1e-8;
  double xi_scale = 1.0;
  std::vector<PointResult> points;
  int failed = 0;
  Verdict degenerate;
  Verdict totally_geodesic;
  Verdict totally_umbilical;
  Verdict minimal;
  double worst_integrability = 0.0;
  double worst_certificate = 0.0;
};

/// Per-point analyses plus sample-based global verdicts. Points are analysed
/// concurrently; the report depends only on the input order. Throws
/// GeometryError(EmptySample) on an empty list.
ClassificationReport classify(const MongeGenerator& gen, std::span<const SurfacePoint> points,
                              const AnalysisOptions& options = {});

/// Recomputes the verdicts of a report from its per-point data and tol.
void assign_verdicts(ClassificationReport& report, int dimension);

}  // namespace lightlike
