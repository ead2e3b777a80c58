#include "lightlike/simd/lane_kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LIGHTLIKE_HAVE_AVX2_KERNELS 1
#endif

namespace lightlike::simd {

#ifdef LIGHTLIKE_HAVE_AVX2_KERNELS
namespace {

// No FMA: mul and add round separately, exactly like the scalar reference.

__attribute__((target("avx2"))) void add_avx2(const double* a, const double* b,
                                              double* out) {
  for (int k = 0; k < kLanes; k += 4)
    _mm256_storeu_pd(out + k, _mm256_add_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
}

__attribute__((target("avx2"))) void sub_avx2(const double* a, const double* b,
                                              double* out) {
  for (int k = 0; k < kLanes; k += 4)
    _mm256_storeu_pd(out + k, _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
}

__attribute__((target("avx2"))) void scale_avx2(const double* a, double alpha,
                                                double* out) {
  const __m256d s = _mm256_set1_pd(alpha);
  for (int k = 0; k < kLanes; k += 4)
    _mm256_storeu_pd(out + k, _mm256_mul_pd(s, _mm256_loadu_pd(a + k)));
}

__attribute__((target("avx2"))) void lincomb_avx2(const double* a, double alpha,
                                                  const double* b, double beta,
                                                  double* out) {
  const __m256d sa = _mm256_set1_pd(alpha);
  const __m256d sb = _mm256_set1_pd(beta);
  for (int k = 0; k < kLanes; k += 4) {
    const __m256d x = _mm256_mul_pd(sa, _mm256_loadu_pd(a + k));
    const __m256d y = _mm256_mul_pd(sb, _mm256_loadu_pd(b + k));
    _mm256_storeu_pd(out + k, _mm256_add_pd(x, y));
  }
}

__attribute__((target("avx2"))) void sym_outer_update_avx2(double* lanes,
                                                           const double* u,
                                                           const double* v,
                                                           double coef, int dim) {
  for (int i = 0; i < dim; ++i) {
    const double p = coef * u[i];
    const double q = coef * v[i];
    double* row = lanes + hess_row_offset(i) - i;
    const __m256d vp = _mm256_set1_pd(p);
    const __m256d vq = _mm256_set1_pd(q);
    int j = i;
    // Row i is contiguous up to column kMaxJetDim - 1.
    for (; j + 4 <= dim; j += 4) {
      const __m256d t = _mm256_add_pd(_mm256_mul_pd(vp, _mm256_loadu_pd(v + j)),
                                      _mm256_mul_pd(vq, _mm256_loadu_pd(u + j)));
      _mm256_storeu_pd(row + j, _mm256_add_pd(_mm256_loadu_pd(row + j), t));
    }
    for (; j < dim; ++j) row[j] = row[j] + (p * v[j] + q * u[j]);
  }
}

}  // namespace

const LaneKernels& avx2_kernels() {
  static const LaneKernels kernels{SimdLevel::Avx2, add_avx2, sub_avx2,
                                   scale_avx2, lincomb_avx2,
                                   sym_outer_update_avx2};
  return kernels;
}

#else

const LaneKernels& avx2_kernels() {
  throw std::invalid_argument("AVX2 kernels are not built for this architecture");
}

#endif

}  // namespace lightlike::simd
