#include <atomic>
#include <stdexcept>
#include <string>

#include "lightlike/simd/lane_kernels.hpp"

namespace lightlike::simd {

std::string_view to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "unknown";
}

bool cpu_supports(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar: return true;
    case SimdLevel::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

SimdLevel best_supported_level() {
  return cpu_supports(SimdLevel::Avx2) ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

namespace {

const LaneKernels& kernels_for(SimdLevel level) {
  return level == SimdLevel::Avx2 ? avx2_kernels() : scalar_kernels();
}

std::atomic<const LaneKernels*>& active_slot() {
  static std::atomic<const LaneKernels*> slot{&kernels_for(best_supported_level())};
  return slot;
}

}  // namespace

const LaneKernels& active_kernels() {
  return *active_slot().load(std::memory_order_acquire);
}

void set_active_level(SimdLevel level) {
  if (!cpu_supports(level))
    throw std::invalid_argument("CPU does not support " + std::string(to_string(level)));
  active_slot().store(&kernels_for(level), std::memory_order_release);
}

}  // namespace lightlike::simd
