#include "lightlike/simd/lane_kernels.hpp"

namespace lightlike::simd {
namespace {

void add_scalar(const double* a, const double* b, double* out) {
  for (int k = 0; k < kLanes; ++k) out[k] = a[k] + b[k];
}

void sub_scalar(const double* a, const double* b, double* out) {
  for (int k = 0; k < kLanes; ++k) out[k] = a[k] - b[k];
}

void scale_scalar(const double* a, double alpha, double* out) {
  for (int k = 0; k < kLanes; ++k) out[k] = alpha * a[k];
}

void lincomb_scalar(const double* a, double alpha, const double* b, double beta,
                    double* out) {
  for (int k = 0; k < kLanes; ++k) out[k] = alpha * a[k] + beta * b[k];
}

void sym_outer_update_scalar(double* lanes, const double* u, const double* v,
                             double coef, int dim) {
  for (int i = 0; i < dim; ++i) {
    const double p = coef * u[i];
    const double q = coef * v[i];
    double* row = lanes + hess_row_offset(i) - i;  // row[j] is H_ij
    for (int j = i; j < dim; ++j) row[j] = row[j] + (p * v[j] + q * u[j]);
  }
}

}  // namespace

const LaneKernels& scalar_kernels() {
  static const LaneKernels kernels{SimdLevel::Scalar, add_scalar, sub_scalar,
                                   scale_scalar, lincomb_scalar,
                                   sym_outer_update_scalar};
  return kernels;
}

}  // namespace lightlike::simd
