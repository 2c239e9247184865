#pragma once

// Real Airy functions Ai, Bi and their first derivatives.
//
// Evaluation regimes, by |z|:
//   |z| <= kSeriesLimit          Maclaurin series f, g with compensated sums
//   kSeriesLimit < |z| < kAsymptoticLimit
//                                Taylor expansion of the Airy ODE about the
//                                nearest node of a precomputed table
//   |z| >= kAsymptoticLimit      Poincare asymptotic expansions in
//                                xi = (2/3)|z|^{3/2}
// The node table is seeded from the series at +-kSeriesLimit (Bi for z > 0,
// both functions for z < 0) and from the asymptotic expansion at
// +kAsymptoticLimit (Ai for z > 0, stepped backwards so the recessive
// solution is always integrated in its stable direction).
//
// Accuracy is ~1e-14 relative to the local magnitude scale for |z| <= 15.
// For z < 0 the relevant scale is the modulus sqrt(Ai^2 + Bi^2) (or its
// derivative analogue); relative error against the value itself is unbounded
// near the zeros, as for any floating-point evaluation. Beyond |z| = 15 the
// oscillatory phase loses roughly |z|^{3/2} ulps.

namespace triwell {

struct AiryQuad {
  double z = 0.0;
  double ai = 0.0;
  double ai_prime = 0.0;
  double bi = 0.0;
  double bi_prime = 0.0;
};

inline constexpr double kSeriesLimit = 3.0;
inline constexpr double kAsymptoticLimit = 9.0;
inline constexpr double kAiryArgumentLimit = 110.0;

/// Ai, Ai', Bi, Bi' at z. Throws DomainError for non-finite z and RangeError
/// for |z| > 110. Bi overflows to +inf and Ai underflows to 0 for z >~ 104.
AiryQuad airy_eval(double z);

/// Partial sums of the Maclaurin series, keeping `order` terms of each of
///   f(z) = 1 + z^3/3! + 4 z^6/6! + ...,   g(z) = z + 2 z^4/4! + ...
/// with Ai = c1 f - c2 g and Bi = sqrt(3) (c1 f + c2 g). Derivatives are the
/// term-by-term derivatives of the same truncated sums.
AiryQuad airy_series_truncated(double z, int order);

/// c1 = Ai(0) = 3^{-2/3} / Gamma(2/3).
double airy_c1();
/// c2 = -Ai'(0) = 3^{-1/3} / Gamma(1/3).
double airy_c2();

/// Lanczos approximation (g = 7, 9 terms) with reflection for x < 1/2.
/// Relative error ~1e-15 on the positive axis.
double lanczos_gamma(double x);

}  // namespace triwell
