#include <algorithm>
#include <cmath>
#include <thread>

#include "lightlike/monge.hpp"

namespace lightlike {

namespace {

PointResult analyse_one(const MongeGenerator& gen, const SurfacePoint& p, int index,
                        const AnalysisOptions& options) {
  PointResult r;
  r.index = index;
  r.point = p;
  try {
    r.analysis = analyze_point(gen, p, options);
  } catch (const std::exception& e) {
    r.error = e.what();
    if (r.error.empty()) r.error = "unknown error";
  }
  return r;
}

// Folds one per-point quantity into a verdict: state True iff every value is
// below `limit` (1 for pre-normalised values).
template <class Extract>
Verdict fold(const std::vector<PointResult>& points, Extract extract) {
  Verdict v;
  v.state = VerdictState::True;
  v.worst = 0.0;
  for (const auto& r : points) {
    if (!r.analysis) continue;
    const auto value = extract(*r.analysis);
    if (!value) return Verdict{VerdictState::NotApplicable, 0.0, -1};
    if (v.witness < 0 || *value > v.worst) {
      v.worst = *value;
      v.witness = r.index;
    }
  }
  return v;
}

}  // namespace

void assign_verdicts(ClassificationReport& report, int dimension) {
  const double tol = report.tol;
  const int total = static_cast<int>(report.points.size());
  report.failed = static_cast<int>(std::count_if(
      report.points.begin(), report.points.end(), [](const PointResult& r) { return !r.analysis; }));

  const bool indeterminate = report.failed * 10 > total || report.failed == total;
  auto finish = [&](Verdict v, auto below) {
    if (indeterminate) return Verdict{VerdictState::Indeterminate, v.worst, v.witness};
    if (v.state == VerdictState::True && !below(v.worst)) v.state = VerdictState::False;
    return v;
  };
  auto below_tol = [&](double x) { return x < tol; };

  report.degenerate = finish(
      fold(report.points,
           [](const PointAnalysis& a) -> std::optional<double> { return std::abs(a.lightlike_defect); }),
      below_tol);

  if (report.degenerate.state != VerdictState::True) {
    const VerdictState s = report.degenerate.state == VerdictState::Indeterminate
                               ? VerdictState::Indeterminate
                               : VerdictState::NotApplicable;
    report.totally_geodesic = report.totally_umbilical = report.minimal = Verdict{s, 0.0, -1};
  } else {
    report.totally_geodesic = finish(
        fold(report.points,
             [](const PointAnalysis& a) -> std::optional<double> { return max_abs(a.B) / a.scale; }),
        below_tol);
    if (dimension < 2) {
      report.totally_umbilical = report.minimal = Verdict{VerdictState::NotApplicable, 0.0, -1};
    } else {
      report.totally_umbilical =
          finish(fold(report.points,
                      [](const PointAnalysis& a) -> std::optional<double> {
                        if (!a.umbilic) return std::nullopt;
                        return a.umbilic->residual;
                      }),
                 below_tol);
      report.minimal = finish(fold(report.points,
                                   [](const PointAnalysis& a) -> std::optional<double> {
                                     if (!a.minimal_defect) return std::nullopt;
                                     return std::abs(*a.minimal_defect) / a.scale;
                                   }),
                              below_tol);
    }
  }

  report.worst_integrability = 0.0;
  report.worst_certificate = 0.0;
  for (const auto& r : report.points) {
    if (!r.analysis) continue;
    const PointAnalysis& a = *r.analysis;
    if (a.integrability_defect)
      report.worst_integrability = std::max(report.worst_integrability, *a.integrability_defect);
    if (!a.lightlike) continue;
    const Certificates& c = a.certificates;
    for (double v : {c.xi_n, c.n_n, c.xi_xi, c.normality, c.screen_n, c.screen_xi, c.screen_x0,
                     c.screen_ortho, c.gauss_tangency, c.weingarten_tangency})
      report.worst_certificate = std::max(report.worst_certificate, v);
  }
}

ClassificationReport classify(const MongeGenerator& gen, std::span<const SurfacePoint> points,
                              const AnalysisOptions& options) {
  if (points.empty())
    throw GeometryError(GeometryErrorKind::EmptySample, "classify needs at least one point");

  ClassificationReport report;
  report.generator = gen.name();
  report.parameters = gen.chart().parameters();
  report.tol = options.tolerances.tol;
  report.xi_scale = options.xi_scale;
  report.points.resize(points.size());

  const std::size_t n = points.size();
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t k = 0; k < n; ++k)
      report.points[k] = analyse_one(gen, points[k], static_cast<int>(k), options);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < n; k += workers)
          report.points[k] = analyse_one(gen, points[k], static_cast<int>(k), options);
      });
    }
  }
  assign_verdicts(report, gen.dimension());
  return report;
}

}  // namespace lightlike
