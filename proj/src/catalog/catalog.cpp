#include "lightlike/catalog.hpp"

#include <stdexcept>

namespace lightlike {

namespace {

struct Recipe {
  const char* name;
  const char* description;
  CatalogEntry (*make)(std::span<const CoordinateChart::Parameter>);
};

MongeGenerator make_generator(const std::string& name, const CoordinateChart& chart,
                              const std::vector<std::vector<std::string>>& metric,
                              const std::string& scalar_field,
                              const std::vector<std::string>& domain) {
  std::vector<DomainConstraint> constraints;
  for (const auto& c : domain) constraints.push_back(parse_constraint(c, chart));
  return MongeGenerator(name, MetricField::parse(chart, metric), parse(scalar_field, chart),
                        std::move(constraints));
}

std::vector<std::vector<std::string>> diagonal_metric(int d, const std::string& entry) {
  std::vector<std::vector<std::string>> m(static_cast<std::size_t>(d),
                                          std::vector<std::string>(static_cast<std::size_t>(d), "0"));
  for (int i = 0; i < d; ++i) m[i][i] = entry;
  return m;
}

void reject_overrides(const char* name, std::span<const CoordinateChart::Parameter> overrides) {
  if (!overrides.empty())
    throw std::invalid_argument(std::string("builtin '") + name + "' has no parameters");
}

CatalogEntry hyperbolic(int d, std::span<const CoordinateChart::Parameter> overrides) {
  const std::string name = d == 2 ? "hyperbolic2" : "hyperbolic3";
  reject_overrides(name.c_str(), overrides);
  const std::vector<std::string> coords =
      d == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
  const std::string& h = coords.back();
  CoordinateChart chart(coords);
  CatalogEntry entry{make_generator(name, chart, diagonal_metric(d, "1/" + h + "^2"), "ln(" + h + ")",
                                    {h + " > 0"}),
                     "upper half-space model of hyperbolic " + std::to_string(d) +
                         "-space, F = ln of the height coordinate",
                     {},
                     {}};
  entry.default_samples.ranges.assign(static_cast<std::size_t>(d - 1), {-1.0, 1.0});
  entry.default_samples.ranges.push_back({0.5, 4.0});
  entry.default_samples.counts.assign(static_cast<std::size_t>(d), d == 2 ? 5 : 3);
  entry.expected.totally_geodesic = false;
  entry.expected.totally_umbilical = true;
  entry.expected.minimal = false;
  entry.expected.umbilic_rho = "1";
  entry.expected.minimal_defect = std::to_string(-(d - 1));
  return entry;
}

CatalogEntry make_hyperbolic2(std::span<const CoordinateChart::Parameter> o) { return hyperbolic(2, o); }
CatalogEntry make_hyperbolic3(std::span<const CoordinateChart::Parameter> o) { return hyperbolic(3, o); }

CatalogEntry make_schwarzschild(std::span<const CoordinateChart::Parameter> overrides) {
  CoordinateChart chart = CoordinateChart({"t", "r"}, {{"R", 1.0}}).with_parameters(overrides);
  const double R = chart.parameters().front().second;
  if (!(R > 0.0)) throw std::invalid_argument("schwarzschild_tr needs R > 0");
  CatalogEntry entry{
      make_generator("schwarzschild_tr", chart, {{"-(1 - R/r)", "0"}, {"0", "1/(1 - R/r)"}},
                     "sqrt(r)*sqrt(r - R) + R*ln(sqrt(r) + sqrt(r - R))", {"r > R"}),
      "(t, r) slice of the Schwarzschild exterior, r > R",
      {},
      {}};
  entry.default_samples.ranges = {{0.0, 0.0}, {1.5 * R, 10.0 * R}};
  entry.default_samples.counts = {1, 20};
  entry.expected.totally_geodesic = false;
  entry.expected.totally_umbilical = true;
  entry.expected.minimal = false;
  entry.expected.umbilic_rho = "-R/(2*r^(3/2)*sqrt(r-R))";
  entry.expected.minimal_defect = "R/(2*r^(3/2)*sqrt(r-R))";
  return entry;
}

CatalogEntry make_euclid_hyperplane(std::span<const CoordinateChart::Parameter> overrides) {
  reject_overrides("euclid_hyperplane", overrides);
  CoordinateChart chart({"x1", "x2", "x3"});
  CatalogEntry entry{make_generator("euclid_hyperplane", chart, diagonal_metric(3, "1"), "x1", {}),
                     "flat R^3, F = x1: a null hyperplane of Minkowski space",
                     {},
                     {}};
  entry.default_samples.ranges.assign(3, {-1.0, 1.0});
  entry.default_samples.counts = {3, 3, 3};
  entry.expected.totally_geodesic = true;
  entry.expected.totally_umbilical = true;
  entry.expected.minimal = true;
  entry.expected.umbilic_rho = "0";
  entry.expected.minimal_defect = "0";
  return entry;
}

CatalogEntry make_euclid_cone(std::span<const CoordinateChart::Parameter> overrides) {
  reject_overrides("euclid_cone", overrides);
  CoordinateChart chart({"x", "y"});
  CatalogEntry entry{make_generator("euclid_cone", chart, diagonal_metric(2, "1"),
                                    "sqrt(x^2 + y^2)", {"x^2 + y^2 > 0"}),
                     "flat R^2, F = distance to the origin: the light cone",
                     {},
                     {}};
  entry.default_samples.ranges = {{-2.0, 2.0}, {-2.0, 2.0}};
  entry.default_samples.counts = {4, 4};
  entry.expected.totally_geodesic = false;
  entry.expected.totally_umbilical = true;
  entry.expected.minimal = false;
  entry.expected.umbilic_rho = "-1/sqrt(x^2 + y^2)";
  entry.expected.minimal_defect = "1/sqrt(x^2 + y^2)";
  return entry;
}

CatalogEntry make_nonlightlike_control(std::span<const CoordinateChart::Parameter> overrides) {
  reject_overrides("nonlightlike_control", overrides);
  CoordinateChart chart({"x1", "x2"});
  CatalogEntry entry{
      make_generator("nonlightlike_control", chart, diagonal_metric(2, "1"), "2*x1", {}),
      "flat R^2, F = 2 x1: a timelike graph, not lightlike",
      {},
      {}};
  entry.default_samples.ranges = {{-1.0, 1.0}, {-1.0, 1.0}};
  entry.default_samples.counts = {3, 3};
  entry.expected.degenerate = false;
  entry.expected.lightlike_defect = 3.0;
  return entry;
}

constexpr Recipe kRecipes[] = {
    {"hyperbolic2", "hyperbolic plane, F = ln y (totally umbilical, rho = 1)", make_hyperbolic2},
    {"hyperbolic3", "hyperbolic 3-space, F = ln z (totally umbilical, rho = 1)", make_hyperbolic3},
    {"schwarzschild_tr", "Schwarzschild (t, r) slice with radius R (totally umbilical)",
     make_schwarzschild},
    {"euclid_hyperplane", "flat R^3, F = x1 (totally geodesic)", make_euclid_hyperplane},
    {"euclid_cone", "flat R^2, F = sqrt(x^2 + y^2) (umbilical, rho = -1/r)", make_euclid_cone},
    {"nonlightlike_control", "flat R^2, F = 2 x1 (not lightlike, defect 3)",
     make_nonlightlike_control},
};

}  // namespace

std::vector<CatalogListing> list_builtins() {
  std::vector<CatalogListing> out;
  for (const auto& r : kRecipes) out.push_back({r.name, r.description});
  return out;
}

CatalogEntry builtin(const std::string& name,
                     std::span<const CoordinateChart::Parameter> overrides) {
  for (const auto& r : kRecipes)
    if (name == r.name) return r.make(overrides);
  std::string valid;
  for (const auto& r : kRecipes) valid += std::string(valid.empty() ? "" : ", ") + r.name;
  throw std::invalid_argument("unknown builtin '" + name + "'; valid names: " + valid);
}

}  // namespace lightlike
