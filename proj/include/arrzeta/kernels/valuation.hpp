#pragma once

#include <cstdint>
#include <vector>

namespace arrzeta::kernels {

// Counts p-adic valuations of a product of linear forms over the full
// residue grid [0, p^k)^nvars. For each grid point the capped valuation
// v = sum_j mult[j] * min(k, val_p(form_j)) is computed; points with v < k
// land in exact[v], points with v >= k (the product vanishes mod p^k) are
// counted as ambiguous.
struct ValuationJob {
  int64_t modulus = 0;  // p^k
  int64_t p = 0;
  int k = 0;
  int nvars = 0;
  int nforms = 0;
  std::vector<int32_t> coeff;     // nforms x nvars, row-major, in [0, modulus)
  std::vector<int32_t> constant;  // per form, in [0, modulus)
  std::vector<int32_t> mult;      // per form, >= 1
};

struct ValuationCounts {
  std::vector<uint64_t> exact;  // size k: counts for v = 0..k-1
  uint64_t ambiguous = 0;

  friend bool operator==(const ValuationCounts&, const ValuationCounts&) = default;
};

ValuationCounts count_valuations_scalar(const ValuationJob& job);

#if defined(__x86_64__) || defined(_M_X64)
ValuationCounts count_valuations_avx2(const ValuationJob& job);
#endif

bool avx2_available();

// Runtime-dispatched entry point; picks the widest kernel the CPU supports.
ValuationCounts count_valuations(const ValuationJob& job, bool force_scalar = false);
const char* valuation_kernel_name();

}  // namespace arrzeta::kernels
