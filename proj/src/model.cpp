#include "triwell/model.hpp"

#include <cmath>
#include <string>

#include "triwell/errors.hpp"

namespace triwell {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError(std::string("WellSpec: ") + name + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

}  // namespace

void WellSpec::validate() const {
  require_positive(V0, "V0");
  require_positive(L, "L");
  require_positive(hbar, "hbar");
  require_positive(mass, "mass");
}

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

double potential_value(double x, const WellSpec& spec) {
  if (!std::isfinite(x)) throw DomainError("potential_value: non-finite x");
  const double r = std::abs(x);
  if (r >= spec.L) return 0.0;
  return spec.V0 / spec.L * (r - spec.L);
}

double energy_unit(const WellSpec& spec) {
  return spec.hbar * spec.hbar / (2.0 * spec.mass * spec.L * spec.L);
}

double nondimensionalize(const WellSpec& spec) {
  spec.validate();
  return 2.0 * spec.mass * spec.L * spec.L * spec.V0 / (spec.hbar * spec.hbar);
}

WellSpec spec_from_v0(double v0) {
  WellSpec spec{.V0 = 0.5 * v0, .L = 1.0, .hbar = 1.0, .mass = 1.0};
  spec.validate();
  return spec;
}

double epsilon_of_z0(double z0, double v0) {
  if (!(v0 > 0.0)) throw DomainError("epsilon_of_z0: v0 must be positive");
  return -v0 * (1.0 + z0 / std::cbrt(v0));
}

double z0_of_epsilon(double epsilon, double v0) {
  if (!(v0 > 0.0)) throw DomainError("z0_of_epsilon: v0 must be positive");
  return -std::cbrt(v0) * (1.0 + epsilon / v0);
}

double energy_of_epsilon(double epsilon, const WellSpec& spec) {
  spec.validate();
  return epsilon * energy_unit(spec);
}

double z_of_x(double x, double z0, double v0, double L) {
  if (!(v0 > 0.0) || !(L > 0.0)) throw DomainError("z_of_x: v0 and L must be positive");
  return z0 + std::cbrt(v0) * (std::abs(x) / L);
}

BoundState make_bound_state(int index, Parity parity, double z0, const WellSpec& spec) {
  const double v0 = nondimensionalize(spec);
  const double epsilon = epsilon_of_z0(z0, v0);
  return BoundState{index, parity, z0, epsilon, energy_of_epsilon(epsilon, spec)};
}

}  // namespace triwell
