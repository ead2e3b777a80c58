#include "lightlike/jet.hpp"

#include <algorithm>
#include <string>

#include "lightlike/error.hpp"

namespace lightlike {

using simd::active_kernels;
using simd::kMaxJetDim;

Jet2 Jet2::variable(double value, int index) {
  Jet2 out(value);
  out.lanes_[index] = 1.0;
  return out;
}

bool Jet2::is_constant() const {
  return std::all_of(lanes_.begin(), lanes_.end(), [](double v) { return v == 0.0; });
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 out(a.value_ + b.value_);
  active_kernels().add(a.lanes_.data(), b.lanes_.data(), out.lanes_.data());
  return out;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 out(a.value_ - b.value_);
  active_kernels().sub(a.lanes_.data(), b.lanes_.data(), out.lanes_.data());
  return out;
}

Jet2 operator-(const Jet2& a) {
  Jet2 out(-a.value_);
  active_kernels().scale(a.lanes_.data(), -1.0, out.lanes_.data());
  return out;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  const auto& k = active_kernels();
  Jet2 out(a.value_ * b.value_);
  // (ab)' = b a' + a b';  (ab)'' = b a'' + a b'' + a'b'^T + b'a'^T
  k.lincomb(a.lanes_.data(), b.value_, b.lanes_.data(), a.value_, out.lanes_.data());
  k.sym_outer_update(out.lanes_.data(), a.lanes_.data(), b.lanes_.data(), 1.0, kMaxJetDim);
  return out;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  const auto& k = active_kernels();
  const double q = a.value_ / b.value_;
  const double inv = 1.0 / b.value_;
  Jet2 out(q);
  // q' = (a' - q b') / b;  q'' = (a'' - q b'' - b'q'^T - q'b'^T) / b
  k.lincomb(a.lanes_.data(), inv, b.lanes_.data(), -q * inv, out.lanes_.data());
  k.sym_outer_update(out.lanes_.data(), b.lanes_.data(), out.lanes_.data(), -inv,
                     kMaxJetDim);
  return out;
}

Jet2 Jet2::compose(const Jet2& a, double f, double df, double d2f) {
  const auto& k = active_kernels();
  Jet2 out(f);
  k.scale(a.lanes_.data(), df, out.lanes_.data());
  k.sym_outer_update(out.lanes_.data(), a.lanes_.data(), a.lanes_.data(), 0.5 * d2f,
                     kMaxJetDim);
  return out;
}

Jet2 Jet2::pow_const(const Jet2& a, double c) {
  const double x = a.value_;
  return compose(a, std::pow(x, c), c * std::pow(x, c - 1.0),
                 c * (c - 1.0) * std::pow(x, c - 2.0));
}

Jet2 Jet2::pow_general(const Jet2& a, const Jet2& b) {
  const auto& k = active_kernels();
  const double x = a.value_;
  const double y = b.value_;
  const double f = std::pow(x, y);
  const double lx = std::log(x);
  const double fx = y * std::pow(x, y - 1.0);
  const double fy = f * lx;
  const double fxx = y * (y - 1.0) * std::pow(x, y - 2.0);
  const double fyy = f * lx * lx;
  const double fxy = std::pow(x, y - 1.0) * (1.0 + y * lx);
  Jet2 out(f);
  k.lincomb(a.lanes_.data(), fx, b.lanes_.data(), fy, out.lanes_.data());
  k.sym_outer_update(out.lanes_.data(), a.lanes_.data(), a.lanes_.data(), 0.5 * fxx,
                     kMaxJetDim);
  k.sym_outer_update(out.lanes_.data(), b.lanes_.data(), b.lanes_.data(), 0.5 * fyy,
                     kMaxJetDim);
  k.sym_outer_update(out.lanes_.data(), a.lanes_.data(), b.lanes_.data(), fxy,
                     kMaxJetDim);
  return out;
}

std::vector<Jet2> seed(std::span<const double> point) {
  if (point.size() > static_cast<std::size_t>(Jet2::kMaxDim))
    throw GeometryError(GeometryErrorKind::DimensionMismatch,
                        "jets support at most " + std::to_string(Jet2::kMaxDim) +
                            " coordinates, got " + std::to_string(point.size()));
  std::vector<Jet2> out;
  out.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i)
    out.push_back(Jet2::variable(point[i], static_cast<int>(i)));
  return out;
}

Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.value());
  return Jet2::compose(x, s, std::cos(x.value()), -s);
}

Jet2 cos(const Jet2& x) {
  const double c = std::cos(x.value());
  return Jet2::compose(x, c, -std::sin(x.value()), -c);
}

Jet2 tan(const Jet2& x) {
  const double t = std::tan(x.value());
  const double sec2 = 1.0 + t * t;
  return Jet2::compose(x, t, sec2, 2.0 * t * sec2);
}

Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.value());
  return Jet2::compose(x, e, e, e);
}

Jet2 log(const Jet2& x) {
  const double v = x.value();
  return Jet2::compose(x, std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sqrt(const Jet2& x) {
  const double s = std::sqrt(x.value());
  return Jet2::compose(x, s, 0.5 / s, -0.25 / (s * x.value()));
}

Jet2 abs(const Jet2& x) {
  const double sign = x.value() < 0.0 ? -1.0 : 1.0;
  return Jet2::compose(x, std::abs(x.value()), sign, 0.0);
}

Jet2 pow(const Jet2& base, const Jet2& exponent) {
  if (exponent.is_constant()) return Jet2::pow_const(base, exponent.value());
  return Jet2::pow_general(base, exponent);
}

}  // namespace lightlike
