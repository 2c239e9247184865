#include "triwell/errors.hpp"
#include "triwell/simd/sturm_kernels.hpp"

namespace triwell::simd {

namespace {

bool cpu_has_avx2() {
#if defined(TRIWELL_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa best_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

void sturm_counts(Isa isa, std::span<const double> diagonal, std::span<const double> off_diagonal_sq,
                  double pivot_floor, std::span<const double> shifts, std::span<std::int64_t> counts) {
  if (diagonal.empty()) throw DomainError("sturm_counts: empty matrix");
  if (off_diagonal_sq.size() + 1 != diagonal.size()) {
    throw DomainError("sturm_counts: off-diagonal length must be one less than the diagonal");
  }
  if (counts.size() != shifts.size()) throw DomainError("sturm_counts: counts and shifts differ in length");
  if (!isa_available(isa)) throw DomainError("sturm_counts: kernel not available on this CPU");
  switch (isa) {
    case Isa::scalar:
      sturm_counts_scalar(diagonal, off_diagonal_sq, pivot_floor, shifts, counts);
      return;
    case Isa::avx2:
#if defined(TRIWELL_HAVE_AVX2_KERNELS)
      sturm_counts_avx2(diagonal, off_diagonal_sq, pivot_floor, shifts, counts);
#endif
      return;
  }
}

}  // namespace triwell::simd
