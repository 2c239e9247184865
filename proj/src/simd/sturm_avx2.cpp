// Built with -mavx2 only; reached through sturm_counts() after a CPUID check.

#include <immintrin.h>

#include "triwell/simd/sturm_kernels.hpp"

namespace triwell::simd {

void sturm_counts_avx2(std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                       double pivot_floor, std::span<const double> shifts,
                       std::span<std::int64_t> counts) {
  const std::size_t n = diagonal.size();
  const std::size_t full = shifts.size() / 4 * 4;

  const __m256d floor = _mm256_set1_pd(pivot_floor);
  const __m256d neg_floor = _mm256_set1_pd(-pivot_floor);
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d zero = _mm256_setzero_pd();

  // Four shifts per register; the recurrence runs down the matrix once for all four.
  for (std::size_t j = 0; j < full; j += 4) {
    const __m256d s = _mm256_loadu_pd(shifts.data() + j);
    __m256i negatives = _mm256_setzero_si256();

    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diagonal[0]), s);
    __m256d tiny = _mm256_cmp_pd(_mm256_andnot_pd(sign_bit, q), floor, _CMP_LE_OQ);
    q = _mm256_blendv_pd(q, neg_floor, tiny);
    negatives = _mm256_sub_epi64(negatives, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));

    for (std::size_t i = 1; i < n; ++i) {
      const __m256d shifted = _mm256_sub_pd(_mm256_set1_pd(diagonal[i]), s);
      q = _mm256_sub_pd(shifted, _mm256_div_pd(_mm256_set1_pd(off_diagonal_sq[i - 1]), q));
      tiny = _mm256_cmp_pd(_mm256_andnot_pd(sign_bit, q), floor, _CMP_LE_OQ);
      q = _mm256_blendv_pd(q, neg_floor, tiny);
      negatives = _mm256_sub_epi64(negatives, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(counts.data() + j), negatives);
  }

  if (full < shifts.size()) {
    sturm_counts_scalar(diagonal, off_diagonal_sq, pivot_floor, shifts.subspan(full), counts.subspan(full));
  }
}

}  // namespace triwell::simd
