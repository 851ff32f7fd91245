#include "arrzeta/kernels/valuation.hpp"

#include <stdexcept>

namespace arrzeta::kernels {

namespace {

inline int capped_valuation(int64_t u, int64_t p, int k) {
  if (u == 0) return k;
  int v = 0;
  while (v < k && u % p == 0) {
    u /= p;
    ++v;
  }
  return v;
}

}  // namespace

ValuationCounts count_valuations_scalar(const ValuationJob& job) {
  const int64_t M = job.modulus;
  const int n = job.nvars;
  const int F = job.nforms;
  ValuationCounts counts;
  counts.exact.assign(job.k, 0);

  // Odometer over the outer coordinates x1..x_{n-1}; the innermost
  // coordinate x0 is the streaming loop.
  std::vector<int64_t> outer(n > 0 ? n - 1 : 0, 0);
  std::vector<int64_t> base(F);
  for (;;) {
    for (int f = 0; f < F; ++f) {
      int64_t acc = job.constant[f];
      for (int i = 1; i < n; ++i)
        acc = (acc + int64_t(job.coeff[f * n + i]) * outer[i - 1]) % M;
      base[f] = acc;
    }
    std::vector<int64_t> u = base;
    for (int64_t x0 = 0; x0 < M; ++x0) {
      int64_t vt = 0;
      for (int f = 0; f < F; ++f) {
        vt += int64_t(job.mult[f]) * capped_valuation(u[f], job.p, job.k);
        u[f] += job.coeff[f * n + 0];
        if (u[f] >= M) u[f] -= M;
      }
      if (vt >= job.k)
        ++counts.ambiguous;
      else
        ++counts.exact[vt];
    }
    int i = 0;
    for (; i < n - 1; ++i) {
      if (++outer[i] < M) break;
      outer[i] = 0;
    }
    if (i == n - 1) break;
  }
  return counts;
}

}  // namespace arrzeta::kernels
