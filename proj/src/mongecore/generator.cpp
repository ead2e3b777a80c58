#include "lightlike/monge.hpp"

namespace lightlike {

MongeGenerator::MongeGenerator(std::string name, MetricField metric, Expr scalar_field,
                               std::vector<DomainConstraint> constraints)
    : name_(std::move(name)),
      metric_(std::move(metric)),
      scalar_field_(std::move(scalar_field)),
      constraints_(std::move(constraints)),
      params_(metric_.chart().parameter_values()) {}

DomainCheck MongeGenerator::check(std::span<const double> base) const {
  if (static_cast<int>(base.size()) != dimension())
    return {false, "point has " + std::to_string(base.size()) + " coordinates, chart has " +
                       std::to_string(dimension())};
  return check_domain_detailed(constraints_, base, params_);
}

SurfacePoint lift(const MongeGenerator& gen, std::span<const double> base) {
  const DomainCheck c = gen.check(base);
  if (!c.admissible) throw DomainError("", "point outside the generator domain: " + c.diagnostic);
  SurfacePoint p;
  p.base = Eigen::Map<const Vector>(base.data(), static_cast<Eigen::Index>(base.size()));
  p.x0 = evaluate(gen.scalar_field(), base, gen.params());
  return p;
}

std::string_view to_string(VerdictState s) {
  switch (s) {
    case VerdictState::True: return "true";
    case VerdictState::False: return "false";
    case VerdictState::NotApplicable: return "not_applicable";
    case VerdictState::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

}  // namespace lightlike
