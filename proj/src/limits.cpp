#include "triwell/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "triwell/errors.hpp"
#include "triwell/spectrum.hpp"
#include "triwell/wavefunction.hpp"

namespace triwell {

namespace {

void validate_sequence(double lambda, std::span<const double> L_values, double hbar, double mass) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("delta limit: lambda must be positive");
  if (L_values.empty()) throw DomainError("delta limit: empty L sequence");
  for (std::size_t i = 0; i < L_values.size(); ++i) {
    if (!(L_values[i] > 0.0) || !std::isfinite(L_values[i])) throw DomainError("delta limit: L must be positive");
    if (i > 0 && !(L_values[i] < L_values[i - 1])) {
      throw DomainError("delta limit: L values must be strictly decreasing");
    }
    delta_v0(lambda, L_values[i], hbar, mass);
  }
}

WellSpec delta_spec(double lambda, double L, double hbar, double mass) {
  WellSpec spec{.V0 = lambda / L, .L = L, .hbar = hbar, .mass = mass};
  spec.validate();
  return spec;
}

bool strictly_decreasing(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) return false;
  }
  return true;
}

double psi_sup_error(const WaveCoefficients& psi, double v0, double L) {
  const double amplitude = std::sqrt(v0 / (2.0 * L));
  constexpr std::size_t kSamples = 201;
  double worst = 0.0;
  double peak = 0.0;
  for (const WaveSample& s : sample(psi, -5.0 * L, 5.0 * L, kSamples)) {
    const double reference = amplitude * std::exp(-v0 * std::abs(s.x) / (2.0 * L));
    worst = std::max(worst, std::abs(s.psi - reference));
    peak = std::max(peak, std::abs(reference));
  }
  return worst / peak;
}

}  // namespace

double delta_v0(double lambda, double L, double hbar, double mass) {
  const double v0 = 2.0 * mass * lambda * L / (hbar * hbar);
  if (!(v0 >= kMinimumDeltaV0)) {
    std::ostringstream msg;
    msg << "delta limit: L=" << L << " gives v0=" << v0 << " below " << kMinimumDeltaV0
        << "; the root window is too narrow to resolve";
    throw DomainError(msg.str());
  }
  return v0;
}

DeltaLimitCase solve_delta_case(double lambda, double L, double hbar, double mass) {
  const double v0 = delta_v0(lambda, L, hbar, mass);
  const BoundStateList list = find_bound_states(delta_spec(lambda, L, hbar, mass));
  return DeltaLimitCase{lambda, L, delta_limit_epsilon(v0), list.states.front().epsilon};
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_slope: need >= 2 paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(std::abs(x[i]));
    my += std::log(std::abs(y[i]));
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(std::abs(x[i])) - mx;
    sxy += dx * (std::log(std::abs(y[i])) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

ScalingTable scaling_table(double lambda, std::span<const double> L_values, double hbar, double mass) {
  validate_sequence(lambda, L_values, hbar, mass);
  ScalingTable table;
  for (double L : L_values) {
    const WellSpec spec = delta_spec(lambda, L, hbar, mass);
    const double v0 = nondimensionalize(spec);
    const BoundState ground = find_bound_states(spec).states.front();
    table.rows.push_back(ScalingRow{L, ground.z0, ground.z0 + std::cbrt(v0), alpha_of(ground.z0, v0), v0,
                                    ground.epsilon});
  }

  const double L_min = L_values.back();
  std::vector<double> L, z0, zL, alpha, v0, eps;
  for (const ScalingRow& row : table.rows) {
    if (row.L > 10.0 * L_min * (1.0 + 1e-12)) continue;
    L.push_back(row.L);
    z0.push_back(row.z0);
    zL.push_back(row.z_L);
    alpha.push_back(row.alpha);
    v0.push_back(row.v0);
    eps.push_back(row.epsilon);
  }
  if (L.size() >= 2) {
    table.smallest_decade = ScalingSlopes{loglog_slope(L, z0), loglog_slope(L, zL), loglog_slope(L, alpha),
                                          loglog_slope(L, v0), loglog_slope(L, eps)};
  }
  return table;
}

double truncated_even_condition(double z0, double v0) {
  const double alpha = alpha_of(z0, v0);
  const double zL = z0 + std::cbrt(v0);
  return zL * zL - z0 * z0 - 2.0 * alpha;
}

double truncated_even_root_epsilon(double v0) {
  if (!(v0 > 0.0)) throw DomainError("truncated_even_root_epsilon: v0 must be positive");
  const double k = v0 / (1.0 + std::sqrt(1.0 + 2.0 * v0));
  return -k * k;
}

double delta_limit_epsilon(double v0) { return -0.25 * v0 * v0; }

DeltaLimitReport delta_limit_check(double lambda, std::span<const double> L_values, double hbar, double mass) {
  validate_sequence(lambda, L_values, hbar, mass);
  DeltaLimitReport report;
  report.lambda = lambda;
  report.delta_energy = -mass * lambda * lambda / (2.0 * hbar * hbar);

  std::vector<double> ratio_errors, energy_errors, psi_errors, Ls, abs_eps;
  for (double L : L_values) {
    const WellSpec spec = delta_spec(lambda, L, hbar, mass);
    const double v0 = nondimensionalize(spec);
    const BoundStateList list = find_bound_states(spec);
    const BoundState& ground = list.states.front();

    DeltaLimitRow row;
    row.L = L;
    row.v0 = v0;
    row.count = list.states.size();
    row.ground_parity = ground.parity;
    row.epsilon = ground.epsilon;
    row.predicted_epsilon = delta_limit_epsilon(v0);
    row.ratio_error = std::abs(ground.epsilon / row.predicted_epsilon - 1.0);
    row.energy = ground.energy;
    row.energy_error = std::abs(ground.energy / report.delta_energy - 1.0);
    row.psi_error = psi_sup_error(normalize(match_coefficients(ground, v0, L)), v0, L);
    report.rows.push_back(row);

    ratio_errors.push_back(row.ratio_error);
    energy_errors.push_back(row.energy_error);
    psi_errors.push_back(row.psi_error);
    Ls.push_back(L);
    abs_eps.push_back(std::abs(row.epsilon));
  }

  report.single_even_below_threshold = true;
  for (const DeltaLimitRow& row : report.rows) {
    if (row.count > 1) {
      report.odd_threshold = row.L;  // rows are in decreasing L, so the last hit is the smallest
    }
  }
  for (const DeltaLimitRow& row : report.rows) {
    const bool below = !report.odd_threshold || row.L < *report.odd_threshold;
    if (below && (row.count != 1 || row.ground_parity != Parity::even)) report.single_even_below_threshold = false;
  }
  const std::size_t n = report.rows.size();
  report.single_state_at_two_smallest = true;
  for (std::size_t i = n >= 2 ? n - 2 : 0; i < n; ++i) {
    if (report.rows[i].count != 1) report.single_state_at_two_smallest = false;
  }
  report.ratio_monotone = strictly_decreasing(ratio_errors);
  report.energy_monotone = strictly_decreasing(energy_errors);
  report.psi_monotone = strictly_decreasing(psi_errors);
  report.epsilon_slope = n >= 2 ? loglog_slope(Ls, abs_eps) : 0.0;

  report.passed = report.single_even_below_threshold && report.single_state_at_two_smallest &&
                  report.ratio_monotone && report.energy_monotone && report.psi_monotone &&
                  report.rows.back().ratio_error < kDeltaRatioTolerance &&
                  (n < 2 || std::abs(report.epsilon_slope - 2.0) <= kSlopeTolerance);
  return report;
}

}  // namespace triwell
