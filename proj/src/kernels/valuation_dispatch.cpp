#include "arrzeta/kernels/valuation.hpp"

namespace arrzeta::kernels {

bool avx2_available() {
#if defined(ARRZETA_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

ValuationCounts count_valuations(const ValuationJob& job, bool force_scalar) {
#if defined(ARRZETA_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  // The vector path pays off once the inner loop is long enough for full
  // 8-lane batches.
  if (!force_scalar && job.modulus >= 16 && avx2_available())
    return count_valuations_avx2(job);
#else
  (void)force_scalar;
#endif
  return count_valuations_scalar(job);
}

const char* valuation_kernel_name() {
  return avx2_available() ? "avx2" : "scalar";
}

}  // namespace arrzeta::kernels
