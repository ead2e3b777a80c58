#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lightlike/monge.hpp"

namespace lightlike {

/// Sample specification: either a Cartesian grid (inclusive endpoints) or an
/// explicit list of base points.
struct SampleSpec {
  std::vector<std::pair<double, double>> ranges;
  std::vector<int> counts;
  std::vector<std::vector<double>> points;  ///< used when ranges is empty

  bool is_grid() const { return !ranges.empty(); }
  friend bool operator==(const SampleSpec&, const SampleSpec&) = default;
};

/// Verdicts and closed forms a catalog entry must reproduce.
struct ExpectedResults {
  bool degenerate = true;
  std::optional<bool> totally_geodesic;
  std::optional<bool> totally_umbilical;
  std::optional<bool> minimal;
  /// Closed form of the umbilical factor, as an expression over the chart.
  std::optional<std::string> umbilic_rho;
  /// Closed form of the eps-weighted Hessian trace over ker dF.
  std::optional<std::string> minimal_defect;
  std::optional<double> lightlike_defect;
};

struct CatalogEntry {
  MongeGenerator generator;
  std::string description;
  SampleSpec default_samples;
  ExpectedResults expected;
};

struct CatalogListing {
  std::string name;
  std::string description;
};

/// The built-in generators in stable order.
std::vector<CatalogListing> list_builtins();

/// Throws std::invalid_argument listing the valid names for an unknown name.
/// `overrides` replaces parameter values (e.g. R of the Schwarzschild chart);
/// grids that depend on a parameter are rescaled with it.
CatalogEntry builtin(const std::string& name,
                     std::span<const CoordinateChart::Parameter> overrides = {});

}  // namespace lightlike
