#include <cmath>

#include "local.hpp"

namespace lightlike {

namespace {

// Screen fields s_a(q) = e_a - g(e_a, N) xi at base point q, ambient components.
std::vector<Vector> screen_fields(const MongeGenerator& gen, const Vector& q) {
  const detail::LocalFrame f =
      detail::local_frame(gen, {q.data(), static_cast<std::size_t>(q.size())}, 1.0);
  std::vector<Vector> s;
  s.reserve(f.e.size());
  for (const auto& ea : f.e) s.push_back(ea - detail::ambient_dot(f.gbar, ea, f.n) * f.xi);
  return s;
}

}  // namespace

double screen_integrability_defect_at(const MongeGenerator& gen, const SurfacePoint& p,
                                      const AnalysisOptions& options) {
  const int d = gen.dimension();
  if (d <= 2) return 0.0;
  const double h = options.bracket_step;
  const detail::LocalFrame at_p =
      detail::local_frame(gen, {p.base.data(), static_cast<std::size_t>(d)}, 1.0);
  const std::vector<Vector> s = screen_fields(gen, p.base);

  // ds[nu][a] = d s_a / d x^nu (base coordinate nu), central differences.
  std::vector<std::vector<Vector>> ds(static_cast<std::size_t>(d));
  for (int nu = 0; nu < d; ++nu) {
    Vector plus = p.base;
    Vector minus = p.base;
    plus(nu) += h;
    minus(nu) -= h;
    const auto sp = screen_fields(gen, plus);
    const auto sm = screen_fields(gen, minus);
    for (int a = 0; a < d; ++a) ds[nu].push_back((sp[a] - sm[a]) / (2.0 * h));
  }

  double defect = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      // Components do not depend on x0, so only base directions contribute.
      Vector bracket = Vector::Zero(d + 1);
      for (int nu = 0; nu < d; ++nu)
        bracket += s[a](nu + 1) * ds[nu][b] - s[b](nu + 1) * ds[nu][a];
      const double value =
          std::abs(bracket(0)) + std::abs(detail::ambient_dot(at_p.gbar, bracket, at_p.n));
      defect = std::max(defect, value);
    }
  }
  return defect;
}

}  // namespace lightlike
