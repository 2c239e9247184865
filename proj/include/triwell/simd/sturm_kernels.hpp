#pragma once

// Sturm-sequence counting kernels for a symmetric tridiagonal matrix T with
// diagonal d and squared off-diagonal e2. For a shift s the pivots of the
// LDL^T factorisation of T - sI are
//   q_0 = d_0 - s,   q_i = (d_i - s) - e2_{i-1} / q_{i-1},
// with any |q_i| <= pivot_floor replaced by -pivot_floor. The number of
// negative pivots equals the number of eigenvalues strictly below s.
//
// Every kernel evaluates a batch of independent shifts. The scalar kernel is
// the reference; vector kernels perform the same IEEE operations in the same
// order and must return identical counts.

#include <cstdint>
#include <span>
#include <string_view>

namespace triwell::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when the kernel was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// The widest available kernel; detected once per process.
Isa best_isa();

void sturm_counts_scalar(std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                         double pivot_floor, std::span<const double> shifts,
                         std::span<std::int64_t> counts);

#if defined(TRIWELL_HAVE_AVX2_KERNELS)
void sturm_counts_avx2(std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                       double pivot_floor, std::span<const double> shifts,
                       std::span<std::int64_t> counts);
#endif

/// Runs the requested kernel; throws DomainError if it is not available.
void sturm_counts(Isa isa, std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                  double pivot_floor, std::span<const double> shifts, std::span<std::int64_t> counts);

}  // namespace triwell::simd
