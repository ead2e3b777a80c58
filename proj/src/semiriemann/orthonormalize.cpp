#include <cmath>
#include <string>

#include "lightlike/semiriemann.hpp"

namespace lightlike {

OrthoFrame orthonormalize(std::span<const Vector> vectors, const Matrix& metric) {
  const auto m = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != metric.rows())
      throw GeometryError(GeometryErrorKind::DimensionMismatch,
                          "vector length does not match the metric");

  double gram_max = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      gram_max = std::max(gram_max, std::abs(vectors[a].dot(metric * vectors[b])));
  const double threshold = 1e-10 * (1.0 + gram_max);

  std::vector<Vector> remaining(vectors.begin(), vectors.end());
  OrthoFrame frame;
  frame.vectors.reserve(m);
  frame.signs.reserve(m);
  while (!remaining.empty()) {
    std::size_t pivot = 0;
    double best = -1.0;
    double pivot_self = 0.0;
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      const double self = remaining[a].dot(metric * remaining[a]);
      if (std::abs(self) > best) {
        best = std::abs(self);
        pivot = a;
        pivot_self = self;
      }
    }
    if (!(best >= threshold))
      throw GeometryError(GeometryErrorKind::NearNullPivot,
                          "near-null pivot |g(v,v)| = " + format_number(best) +
                              " after " + std::to_string(frame.vectors.size()) +
                              " vectors: the metric is degenerate on their span");
    const int sign = pivot_self > 0.0 ? 1 : -1;
    Vector e = remaining[pivot] / std::sqrt(best);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pivot));
    const Vector ge = metric * e;
    for (auto& w : remaining) w -= (sign * ge.dot(w)) * e;
    frame.vectors.push_back(std::move(e));
    frame.signs.push_back(sign);
  }
  return frame;
}

}  // namespace lightlike
