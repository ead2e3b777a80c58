#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "lightlike/simd/lane_kernels.hpp"

namespace lightlike {

/// Second-order forward-mode scalar: value, gradient and Hessian with respect
/// to the chart coordinates, propagated by truncated Taylor algebra.
///
/// Only the upper Hessian triangle is stored, so the Hessian is symmetric by
/// construction. Components past the seeded dimension stay exactly zero.
class Jet2 {
 public:
  static constexpr int kMaxDim = simd::kMaxJetDim;

  Jet2() = default;
  Jet2(double value) : value_(value) {}  // NOLINT: constants promote implicitly

  /// The i-th coordinate of a point: gradient e_i, zero Hessian.
  static Jet2 variable(double value, int index);

  double value() const { return value_; }
  double grad(int i) const { return lanes_[i]; }
  double hess(int i, int j) const { return lanes_[simd::hess_index(i, j)]; }

  /// True when every derivative lane is zero (the jet is a constant).
  bool is_constant() const;

  const simd::LaneBuffer& lanes() const { return lanes_; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b);
  friend Jet2 operator-(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator/(const Jet2& a, const Jet2& b);
  friend Jet2 operator-(const Jet2& a);

  /// f(a) given f(a.value), f'(a.value), f''(a.value).
  static Jet2 compose(const Jet2& a, double f, double df, double d2f);
  /// a^b with b a constant jet.
  static Jet2 pow_const(const Jet2& a, double exponent);
  /// a^b for a.value() > 0 and arbitrary b.
  static Jet2 pow_general(const Jet2& a, const Jet2& b);

 private:
  double value_ = 0.0;
  simd::LaneBuffer lanes_{};
};

/// Seeds one jet per coordinate: value point[i], gradient e_i, Hessian 0.
/// Throws GeometryError(DimensionMismatch) if point.size() > Jet2::kMaxDim.
std::vector<Jet2> seed(std::span<const double> point);

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.value(); }
inline bool is_constant(double) { return true; }
inline bool is_constant(const Jet2& x) { return x.is_constant(); }

// Elementary functions over jets. Domain checks live in the expression
// evaluator; these assume the argument is inside the domain.
Jet2 sin(const Jet2& x);
Jet2 cos(const Jet2& x);
Jet2 tan(const Jet2& x);
Jet2 exp(const Jet2& x);
Jet2 log(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 abs(const Jet2& x);
Jet2 pow(const Jet2& base, const Jet2& exponent);

}  // namespace lightlike
