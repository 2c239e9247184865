#pragma once

// Parity-resolved quantization conditions and their roots.
//
// The matching condition at x = L is used in cross-multiplied form, so the
// residuals have no poles inside the bound-state window z0 in (-v0^{1/3}, 0):
//   even: D_e = [Ai'(zL) - a Ai(zL)] Bi'(z0) - [Bi'(zL) - a Bi(zL)] Ai'(z0)
//   odd:  D_o = [Ai'(zL) - a Ai(zL)] Bi(z0)  - [Bi'(zL) - a Bi(zL)] Ai(z0)
// with zL = z0 + v0^{1/3} and a = -sqrt(-eps) / v0^{1/3}.

#include <string>
#include <vector>

#include "triwell/model.hpp"

namespace triwell {

struct MatchingResidual {
  double z0 = 0.0;
  Parity parity = Parity::even;
  double value = 0.0;
  /// Product of the Euclidean norms of the two columns of the determinant,
  /// so |value| / scale is the sine of the angle between them.
  double scale = 0.0;
};

/// Throws DomainError unless z0 lies strictly inside (-v0^{1/3}, 0).
double alpha_of(double z0, double v0);

MatchingResidual matching_residual(double z0, double v0, Parity parity);

/// The ratio form: left side minus right side of
///   (Ai'(zL) - a Ai(zL)) / (Bi'(zL) - a Bi(zL)) = Ai'(z0)/Bi'(z0)  (even)
///                                              = Ai(z0)/Bi(z0)    (odd).
/// Has poles; kept for cross-checking the determinant form.
double matching_ratio_difference(double z0, double v0, Parity parity);

struct BoundStateList {
  double v0 = 0.0;
  std::vector<BoundState> states;
  /// Non-fatal observations, e.g. an even and an odd root closer than tol.
  std::vector<std::string> warnings;
};

inline constexpr double kDefaultRootTolerance = 1e-12;

/// All bound states sorted by increasing epsilon, indexed from 0. Roots are
/// bisected until the z0 bracket is no wider than `tol` and then further, down
/// to floating-point resolution, so `tol` is an upper bound on the bracket.
/// Throws ConsistencyError if a double-density rescan sees a different number
/// of sign changes, if parities do not alternate starting from even, or if no
/// state is found.
BoundStateList find_bound_states(const WellSpec& spec, double tol = kDefaultRootTolerance);

std::size_t count_bound_states(const WellSpec& spec);

/// Number of scan points per parity for a given v0.
std::size_t scan_points(double v0);

struct SweepRow {
  double parameter = 0.0;  // v0 or L
  std::vector<BoundState> states;
};

/// Uniform grid v0_min .. v0_max (inclusive) with unit constants L = hbar =
/// mass = 1.
std::vector<SweepRow> sweep_v0(double v0_min, double v0_max, int steps,
                               double tol = kDefaultRootTolerance);

/// Uniform grid in L with V0, hbar, mass taken from `base`.
std::vector<SweepRow> sweep_L(const WellSpec& base, double L_min, double L_max, int steps,
                              double tol = kDefaultRootTolerance);

}  // namespace triwell
