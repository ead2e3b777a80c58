#include "lightlike/report.hpp"

namespace lightlike {

using ojson = nlohmann::ordered_json;

namespace {

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

ojson verdict_json(const Verdict& v) {
  ojson out;
  switch (v.state) {
    case VerdictState::True: out["value"] = true; break;
    case VerdictState::False: out["value"] = false; break;
    case VerdictState::NotApplicable: out["value"] = nullptr; break;
    case VerdictState::Indeterminate: out["value"] = "indeterminate"; break;
  }
  out["worst"] = v.worst;
  out["witness"] = v.witness;
  return out;
}

template <class T>
ojson optional_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson point_json(const PointResult& r) {
  ojson out;
  out["index"] = r.index;
  out["point"] = vector_json(r.point.base);
  out["x0"] = std::isfinite(r.point.x0) ? ojson(r.point.x0) : ojson(nullptr);
  if (!r.analysis) {
    out["status"] = "failed";
    out["error"] = r.error;
    return out;
  }
  const PointAnalysis& a = *r.analysis;
  out["status"] = "ok";
  out["lightlike_defect"] = a.lightlike_defect;
  out["lightlike"] = a.lightlike;
  out["radical_rank"] = a.radical_rank;
  out["scale"] = a.scale;
  out["xi"] = vector_json(a.xi);
  out["n_xi"] = vector_json(a.n_xi);
  out["induced_g"] = matrix_json(a.induced_g);
  out["B"] = matrix_json(a.B);
  out["umbilic_rho"] = a.umbilic ? ojson(a.umbilic->rho) : ojson(nullptr);
  out["umbilic_residual"] = a.umbilic ? ojson(a.umbilic->residual) : ojson(nullptr);
  out["minimal_defect"] = optional_json(a.minimal_defect);
  out["integrability_defect"] = optional_json(a.integrability_defect);
  if (a.lightlike) {
    out["tau"] = vector_json(a.tau);
    out["shape_operator"] = matrix_json(a.shape_op);
  }
  if (a.screen) {
    ojson screen = ojson::array();
    for (std::size_t s = 0; s < a.screen->vectors.size(); ++s)
      screen.push_back({{"vector", vector_json(a.screen->vectors[s])},
                        {"sign", a.screen->signs[s]}});
    out["screen"] = std::move(screen);
  }
  const Certificates& c = a.certificates;
  out["certificates"] = {{"xi_n", c.xi_n},
                         {"n_n", c.n_n},
                         {"xi_xi", c.xi_xi},
                         {"normality", c.normality},
                         {"screen_n", c.screen_n},
                         {"screen_xi", c.screen_xi},
                         {"screen_x0", c.screen_x0},
                         {"screen_orthonormality", c.screen_ortho},
                         {"gauss_tangency", c.gauss_tangency},
                         {"weingarten_tangency", c.weingarten_tangency}};
  return out;
}

}  // namespace

ojson report_to_json(const ClassificationReport& report) {
  ojson doc;
  doc["tool"] = "lightlike";
  doc["version"] = kToolVersion;
  doc["generator"] = report.generator;
  doc["parameters"] = ojson::object();
  for (const auto& [k, v] : report.parameters) doc["parameters"][k] = v;
  doc["tolerances"] = {{"tol", report.tol}, {"xi_scale", report.xi_scale}};
  doc["note"] =
      "verdicts hold on the sampled points only; 'umbilical' means a per-point fit of "
      "Hess(F) = rho (dF dF - g) with residual below tol on the sample";
  doc["verdicts"] = {{"degenerate", verdict_json(report.degenerate)},
                     {"totally_geodesic", verdict_json(report.totally_geodesic)},
                     {"totally_umbilical", verdict_json(report.totally_umbilical)},
                     {"minimal", verdict_json(report.minimal)}};
  doc["summary"] = {{"points", report.points.size()},
                    {"failed", report.failed},
                    {"worst_integrability_defect", report.worst_integrability},
                    {"worst_certificate", report.worst_certificate}};
  ojson points = ojson::array();
  for (const auto& r : report.points) points.push_back(point_json(r));
  doc["points"] = std::move(points);
  return doc;
}

std::string dump_report(const ClassificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace lightlike
