#pragma once

// Small-L behaviour at fixed delta strength: V0 = lambda / L, so that the
// well tends to -lambda delta(x) as L -> 0 with a single even bound state at
// E = -m lambda^2 / (2 hbar^2), i.e. eps = -v0^2 / 4.

#include <optional>
#include <span>
#include <vector>

#include "triwell/model.hpp"

namespace triwell {

struct DeltaLimitCase {
  double lambda = 1.0;
  double L = 1.0;
  double predicted_epsilon = 0.0;  // -v0^2 / 4
  double solver_epsilon = 0.0;
};

/// Smallest accepted dimensionless depth 2 m lambda L / hbar^2; below it the
/// root window approaches the bracketing resolution.
inline constexpr double kMinimumDeltaV0 = 2e-5;

/// v0 = 2 m lambda L / hbar^2.
double delta_v0(double lambda, double L, double hbar = 1.0, double mass = 1.0);

/// Solves the full problem for one L.
DeltaLimitCase solve_delta_case(double lambda, double L, double hbar = 1.0, double mass = 1.0);

struct ScalingRow {
  double L = 0.0;
  double z0 = 0.0;
  double z_L = 0.0;
  double alpha = 0.0;
  double v0 = 0.0;
  double epsilon = 0.0;
};

struct ScalingSlopes {
  double z0 = 0.0;
  double z_L = 0.0;
  double alpha = 0.0;
  double v0 = 0.0;
  double epsilon = 0.0;
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  /// Least-squares log-log slopes against L over the smallest decade
  /// (rows with L <= 10 L_min).
  ScalingSlopes smallest_decade;
};

/// Ground-state quantities for each L. L_values must be strictly decreasing.
ScalingTable scaling_table(double lambda, std::span<const double> L_values, double hbar = 1.0,
                           double mass = 1.0);

/// Least-squares slope of log|y| against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// zL^2 - z0^2 - 2 alpha, the even condition after truncating the Airy
/// series at fourth order in z.
double truncated_even_condition(double z0, double v0);

/// Exact root of the truncated even condition combined with zL = z0 + v0^{1/3}:
/// v0 + 2 eps = 2 sqrt(-eps), so sqrt(-eps) = v0 / (1 + sqrt(1 + 2 v0)).
double truncated_even_root_epsilon(double v0);

/// Leading small-v0 form of the truncated root: -v0^2 / 4.
double delta_limit_epsilon(double v0);

struct DeltaLimitRow {
  double L = 0.0;
  double v0 = 0.0;
  std::size_t count = 0;
  Parity ground_parity = Parity::even;
  double epsilon = 0.0;
  double predicted_epsilon = 0.0;
  double ratio_error = 0.0;  // |eps / (-v0^2/4) - 1|
  double energy = 0.0;
  double energy_error = 0.0;  // relative to -m lambda^2 / (2 hbar^2)
  double psi_error = 0.0;     // relative sup-norm on |x| <= 5L
};

struct DeltaLimitReport {
  double lambda = 1.0;
  double delta_energy = 0.0;
  std::vector<DeltaLimitRow> rows;
  /// Smallest tested L that still has more than one bound state.
  std::optional<double> odd_threshold;
  bool single_even_below_threshold = false;
  bool single_state_at_two_smallest = false;
  bool ratio_monotone = false;
  bool energy_monotone = false;
  bool psi_monotone = false;
  double epsilon_slope = 0.0;  // least squares over all rows
  bool passed = false;
};

inline constexpr double kDeltaRatioTolerance = 1e-2;
inline constexpr double kSlopeTolerance = 0.05;

DeltaLimitReport delta_limit_check(double lambda, std::span<const double> L_values, double hbar = 1.0,
                                   double mass = 1.0);

}  // namespace triwell
