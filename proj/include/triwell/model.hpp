#pragma once

// Physical and dimensionless descriptions of the triangular well
//   V(x) = (V0/L)(|x| - L)  for |x| < L,   0 otherwise,
// together with the coordinate map onto the Airy variable z.

#include <string_view>

namespace triwell {

/// Well depth V0, half-range L, and the units hbar, mass. All strictly
/// positive and finite; `validate` throws DomainError otherwise.
struct WellSpec {
  double V0 = 1.0;
  double L = 1.0;
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const;
};

enum class Parity { even, odd };

std::string_view to_string(Parity parity);

/// One bound state. `energy` is fixed at construction from `epsilon` and the
/// spec it was solved for; it is never recomputed.
struct BoundState {
  int index = 0;
  Parity parity = Parity::even;
  double z0 = 0.0;
  double epsilon = 0.0;
  double energy = 0.0;
};

double potential_value(double x, const WellSpec& spec);

/// hbar^2 / (2 m L^2), the unit of the dimensionless energies.
double energy_unit(const WellSpec& spec);

/// v0 = 2 m L^2 V0 / hbar^2.
double nondimensionalize(const WellSpec& spec);

/// A unit-constant spec (L = hbar = mass = 1) with the given dimensionless
/// depth, i.e. V0 = v0 / 2.
WellSpec spec_from_v0(double v0);

// eps = -v0 (1 + z0 / v0^{1/3}) and its inverse.
double epsilon_of_z0(double z0, double v0);
double z0_of_epsilon(double epsilon, double v0);

double energy_of_epsilon(double epsilon, const WellSpec& spec);

/// z = z0 + v0^{1/3} |x| / L, which is the affine map
/// (v0^{1/3}/L)[|x| - L(1 + eps/v0)] with eps eliminated through z0.
double z_of_x(double x, double z0, double v0, double L);

BoundState make_bound_state(int index, Parity parity, double z0, const WellSpec& spec);

}  // namespace triwell
