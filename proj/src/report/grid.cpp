#include <limits>

#include "lightlike/report.hpp"

namespace lightlike {

namespace {

double grid_coordinate(double lo, double hi, int count, int k) {
  if (count == 1) return lo;
  if (k == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
}

}  // namespace

std::vector<SurfacePoint> grid_sample(const MongeGenerator& gen, const SampleSpec& spec) {
  const auto d = static_cast<std::size_t>(gen.dimension());
  std::vector<std::vector<double>> candidates;
  if (spec.is_grid()) {
    if (spec.ranges.size() != d || spec.counts.size() != d)
      throw GeometryError(GeometryErrorKind::DimensionMismatch,
                          "grid needs one range and one count per coordinate");
    std::size_t total = 1;
    for (int c : spec.counts) {
      if (c < 1)
        throw GeometryError(GeometryErrorKind::EmptySample, "grid counts must be >= 1");
      total *= static_cast<std::size_t>(c);
    }
    std::vector<int> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<double> point(d);
      for (std::size_t i = 0; i < d; ++i)
        point[i] = grid_coordinate(spec.ranges[i].first, spec.ranges[i].second, spec.counts[i],
                                   idx[i]);
      candidates.push_back(std::move(point));
      for (std::size_t i = d; i-- > 0;) {
        if (++idx[i] < spec.counts[i]) break;
        idx[i] = 0;
      }
    }
  } else {
    candidates = spec.points;
  }

  std::vector<SurfacePoint> out;
  for (const auto& c : candidates) {
    if (c.size() != d)
      throw GeometryError(GeometryErrorKind::DimensionMismatch, "sample point has wrong dimension");
    if (!gen.check(c).admissible) continue;
    try {
      out.push_back(lift(gen, c));
    } catch (const DomainError&) {
      // F is undefined at an admissible point; classify reports it as failed.
      SurfacePoint p;
      p.base = Eigen::Map<const Vector>(c.data(), static_cast<Eigen::Index>(d));
      p.x0 = std::numeric_limits<double>::quiet_NaN();
      out.push_back(std::move(p));
    }
  }
  if (out.empty())
    throw GeometryError(GeometryErrorKind::EmptySample,
                        "no sample point of '" + gen.name() + "' lies inside the domain");
  return out;
}

}  // namespace lightlike
