#pragma once

// Piecewise parity eigenfunctions. For x >= 0
//   psi(x) = c_a Ai(z) + c_b Bi(z),        0 <= x < L,  z = z0 + v0^{1/3} x / L
//   psi(x) = c exp(-sqrt(-eps) x / L),     x >= L
// and psi(-x) = +psi(x) (even) or -psi(x) (odd).

#include <cstddef>
#include <vector>

#include "triwell/model.hpp"

namespace triwell {

struct WaveCoefficients {
  double c_a = 0.0;
  double c_b = 0.0;
  double c = 0.0;
  BoundState state;
  double v0 = 0.0;
  double L = 1.0;
};

inline constexpr double kDefaultQuadratureTolerance = 1e-10;

/// Null vector of the parity condition at the origin,
///   even: (c_a, c_b) = (Bi'(z0), -Ai'(z0)),   odd: (Bi(z0), -Ai(z0)),
/// and c from continuity of psi at x = L. Throws ConsistencyError if the
/// state is not a root of its matching residual (|D| > 1e-8 scale).
WaveCoefficients match_coefficients(const BoundState& state, double v0, double L = 1.0);

double evaluate(const WaveCoefficients& coeffs, double x);
/// d psi / dx, analytic on each piece. At x = +-L the interior piece is used.
double evaluate_derivative(const WaveCoefficients& coeffs, double x);

/// Integral of psi^2 over the real line: interior by adaptive Simpson on
/// [0, L], tail 2 c^2 (L / (2 sqrt(-eps))) exp(-2 sqrt(-eps)) in closed form.
double norm_squared(const WaveCoefficients& coeffs, double rel_tol = kDefaultQuadratureTolerance);

/// Rescaled to unit norm with psi(0) > 0 (even) or psi'(0) > 0 (odd).
WaveCoefficients normalize(const WaveCoefficients& coeffs, double rel_tol = kDefaultQuadratureTolerance);

/// Integral of psi_a psi_b over the real line. Both must belong to the same
/// well (equal v0 and L); zero by symmetry for opposite parities.
double overlap(const WaveCoefficients& a, const WaveCoefficients& b,
               double rel_tol = kDefaultQuadratureTolerance);

struct WaveSample {
  double x = 0.0;
  double psi = 0.0;
};

/// n uniform samples on [x_min, x_max], endpoints included.
std::vector<WaveSample> sample(const WaveCoefficients& coeffs, double x_min, double x_max, std::size_t n);

/// Sign changes of psi on a uniform grid, ignoring exact zeros.
int count_nodes(const WaveCoefficients& coeffs, double x_min, double x_max, std::size_t n);

}  // namespace triwell
