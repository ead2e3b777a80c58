#pragma once

#include "lightlike/monge.hpp"

namespace lightlike::detail {

/// Ambient objects at one surface point, built from one jet evaluation.
struct LocalFrame {
  PointTensors t;
  int d = 0;
  double c = 1.0;  // xi scale
  Matrix gbar;
  Vector xi;
  Vector n;
  std::vector<Vector> e;
  double scale = 1.0;
};

LocalFrame local_frame(const MongeGenerator& gen, std::span<const double> base,
                       double xi_scale);

inline double ambient_dot(const Matrix& gbar, const Vector& a, const Vector& b) {
  return a.dot(gbar * b);
}

/// Ambient covariant derivative of e_j along e_i: (F_ij, Gamma^k_ij).
Vector connection_e_e(const LocalFrame& f, int i, int j);
/// Ambient covariant derivative of N along e_i.
Vector connection_e_n(const LocalFrame& f, int i);

}  // namespace lightlike::detail
