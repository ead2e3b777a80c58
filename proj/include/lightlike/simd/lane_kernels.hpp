#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace lightlike::simd {

/// Largest chart dimension a jet can carry.
inline constexpr int kMaxJetDim = 8;

/// Derivative lanes of a jet: gradient [0, kMaxJetDim) followed by the upper
/// triangle of the Hessian stored row by row (row i holds columns i..kMaxJetDim-1).
inline constexpr int kLanes = kMaxJetDim + kMaxJetDim * (kMaxJetDim + 1) / 2;
static_assert(kLanes % 4 == 0, "lane buffer must be a whole number of AVX2 registers");

using LaneBuffer = std::array<double, kLanes>;

constexpr int hess_row_offset(int row) {
  return kMaxJetDim + row * kMaxJetDim - row * (row - 1) / 2;
}

constexpr int hess_index(int i, int j) {
  return i <= j ? hess_row_offset(i) + (j - i) : hess_row_offset(j) + (i - j);
}

enum class SimdLevel { Scalar, Avx2 };

std::string_view to_string(SimdLevel level);

/// One implementation of the lane operations used by Jet2 arithmetic.
/// Every entry point performs the same IEEE operations in the same order for
/// each lane, so all implementations produce bit-identical results.
struct LaneKernels {
  SimdLevel level;
  /// out = a + b
  void (*add)(const double* a, const double* b, double* out);
  /// out = a - b
  void (*sub)(const double* a, const double* b, double* out);
  /// out = alpha * a
  void (*scale)(const double* a, double alpha, double* out);
  /// out = alpha * a + beta * b
  void (*lincomb)(const double* a, double alpha, const double* b, double beta,
                  double* out);
  /// H_ij += (coef*u_i)*v_j + (coef*v_i)*u_j for 0 <= i <= j < dim, H in the
  /// packed upper-triangle part of `lanes`; u and v are gradient blocks.
  void (*sym_outer_update)(double* lanes, const double* u, const double* v,
                           double coef, int dim);
};

const LaneKernels& scalar_kernels();
/// AVX2 kernels; only callable when cpu_supports(SimdLevel::Avx2).
const LaneKernels& avx2_kernels();

bool cpu_supports(SimdLevel level);
SimdLevel best_supported_level();

/// Kernels used by Jet2 arithmetic. Resolved to the best supported level on
/// first use.
const LaneKernels& active_kernels();

/// Forces a level (tests, benchmarking). Throws std::invalid_argument when the
/// CPU lacks it. Not meant to be called while other threads evaluate jets.
void set_active_level(SimdLevel level);

}  // namespace lightlike::simd
