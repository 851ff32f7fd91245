#include "arrzeta/kernels/valuation.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace arrzeta::kernels {

namespace {

// Multiplicative inverse of an odd number mod 2^32 (Newton iteration).
inline uint32_t inverse_mod_2_32(uint32_t a) {
  uint32_t x = a;
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return x;
}

inline int horizontal_popcount_mask(__m256i cmp) {
  return __builtin_popcount(
      static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(cmp))));
}

}  // namespace

// Vector layout: 8 lanes march along the innermost coordinate. Per lane the
// capped valuation of every form value is accumulated with its multiplicity,
// then the totals are binned with compare+popcount per bucket.
ValuationCounts count_valuations_avx2(const ValuationJob& job) {
  const int64_t M = job.modulus;
  const int n = job.nvars;
  const int F = job.nforms;
  const int k = job.k;
  ValuationCounts counts;
  counts.exact.assign(k, 0);

  const bool p_is_two = (job.p == 2);
  const uint32_t pu = static_cast<uint32_t>(job.p);
  const uint32_t inv_p = p_is_two ? 0 : inverse_mod_2_32(pu);
  const uint32_t div_limit = p_is_two ? 0 : 0xFFFFFFFFu / pu;

  const __m256i vM = _mm256_set1_epi32(static_cast<int32_t>(M));
  const __m256i vzero = _mm256_setzero_si256();
  const __m256i vinvp = _mm256_set1_epi32(static_cast<int32_t>(inv_p));
  const __m256i vlimit = _mm256_set1_epi32(static_cast<int32_t>(div_limit));
  const __m256i vone = _mm256_set1_epi32(1);

  // u += delta (mod M), inputs in [0, M)
  auto add_mod = [&](__m256i u, __m256i delta) {
    __m256i s = _mm256_add_epi32(u, delta);
    __m256i ge = _mm256_cmpgt_epi32(vM, s);  // M > s ?
    __m256i corrected = _mm256_sub_epi32(s, vM);
    return _mm256_blendv_epi8(corrected, s, ge);
  };

  // Adds min(k, val_p(u)) * mult to vt, branch-free over k rounds.
  auto accumulate_valuation = [&](__m256i u, __m256i vmult, __m256i vt) {
    for (int round = 0; round < k; ++round) {
      __m256i divisible, quotient;
      if (p_is_two) {
        __m256i odd = _mm256_and_si256(u, vone);
        divisible = _mm256_cmpeq_epi32(odd, vzero);
        quotient = _mm256_srli_epi32(u, 1);
      } else {
        quotient = _mm256_mullo_epi32(u, vinvp);
        // unsigned quotient <= limit  <=>  min(quotient, limit) == quotient
        __m256i mn = _mm256_min_epu32(quotient, vlimit);
        divisible = _mm256_cmpeq_epi32(mn, quotient);
      }
      vt = _mm256_add_epi32(vt, _mm256_and_si256(divisible, vmult));
      u = _mm256_blendv_epi8(u, quotient, divisible);
    }
    return vt;
  };

  std::vector<int64_t> outer(n > 0 ? n - 1 : 0, 0);
  std::vector<int64_t> base(F);
  std::vector<__m256i> lanes(F);
  std::vector<__m256i> step(F);
  std::vector<__m256i> vmult(F);
  for (int f = 0; f < F; ++f) {
    int64_t c0 = job.coeff[f * n + 0];
    step[f] = _mm256_set1_epi32(static_cast<int32_t>((8 * c0) % M));
    vmult[f] = _mm256_set1_epi32(job.mult[f]);
  }

  const int64_t vec_end = M - (M % 8);
  for (;;) {
    for (int f = 0; f < F; ++f) {
      int64_t acc = job.constant[f];
      for (int i = 1; i < n; ++i)
        acc = (acc + int64_t(job.coeff[f * n + i]) * outer[i - 1]) % M;
      base[f] = acc;
      // initialize lanes to acc + c0*(0..7) mod M
      int64_t c0 = job.coeff[f * n + 0];
      alignas(32) int32_t init[8];
      for (int l = 0; l < 8; ++l)
        init[l] = static_cast<int32_t>((acc + c0 * l) % M);
      lanes[f] = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));
    }
    for (int64_t x0 = 0; x0 < vec_end; x0 += 8) {
      __m256i vt = vzero;
      for (int f = 0; f < F; ++f) {
        vt = accumulate_valuation(lanes[f], vmult[f], vt);
        lanes[f] = add_mod(lanes[f], step[f]);
      }
      // bin the 8 totals
      __m256i vk = _mm256_set1_epi32(k);
      __m256i ambiguous = _mm256_cmpgt_epi32(vt, _mm256_sub_epi32(vk, vone));
      counts.ambiguous += horizontal_popcount_mask(ambiguous);
      for (int v = 0; v < k; ++v) {
        __m256i eq = _mm256_cmpeq_epi32(vt, _mm256_set1_epi32(v));
        counts.exact[v] += horizontal_popcount_mask(eq);
      }
    }
    // scalar tail
    for (int64_t x0 = vec_end; x0 < M; ++x0) {
      int64_t vt = 0;
      for (int f = 0; f < F; ++f) {
        int64_t c0 = job.coeff[f * n + 0];
        int64_t u = (base[f] + c0 * x0) % M;
        int v = 0;
        if (u == 0) {
          v = k;
        } else {
          while (v < k && u % job.p == 0) {
            u /= job.p;
            ++v;
          }
        }
        vt += int64_t(job.mult[f]) * v;
      }
      if (vt >= k)
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

#endif  // x86_64
