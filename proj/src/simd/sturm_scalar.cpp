#include <cmath>

#include "triwell/simd/sturm_kernels.hpp"

namespace triwell::simd {

void sturm_counts_scalar(std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                         double pivot_floor, std::span<const double> shifts,
                         std::span<std::int64_t> counts) {
  const std::size_t n = diagonal.size();
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const double s = shifts[j];
    std::int64_t negatives = 0;
    double q = diagonal[0] - s;
    if (std::abs(q) <= pivot_floor) q = -pivot_floor;
    negatives += q < 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      q = (diagonal[i] - s) - off_diagonal_sq[i - 1] / q;
      if (std::abs(q) <= pivot_floor) q = -pivot_floor;
      negatives += q < 0.0;
    }
    counts[j] = negatives;
  }
}

}  // namespace triwell::simd
