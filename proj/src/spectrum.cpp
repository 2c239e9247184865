#include "triwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "triwell/airy.hpp"
#include "triwell/errors.hpp"

namespace triwell {

namespace {

// Fraction of the window kept clear of both ends: delta = kEdgeFraction * v0^{1/3}.
constexpr double kEdgeFraction = 1e-9;
// Roots with -eps/v0 below this are treated as threshold artefacts.
constexpr double kThresholdFraction = 1e-8;

struct Window {
  double lo;
  double hi;
};

Window scan_window(double v0) {
  const double c = std::cbrt(v0);
  const double delta = kEdgeFraction * c;
  return {-c + delta, -delta};
}

int sign_of(double value) { return (value > 0.0) - (value < 0.0); }

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

double grid_point(const Window& w, std::size_t i, std::size_t n) {
  if (i + 1 == n) return w.hi;
  return w.lo + (w.hi - w.lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

std::vector<Bracket> scan(double v0, Parity parity, std::size_t n) {
  const Window w = scan_window(v0);
  std::vector<Bracket> brackets;
  double prev_z = grid_point(w, 0, n);
  double prev_f = matching_residual(prev_z, v0, parity).value;
  for (std::size_t i = 1; i < n; ++i) {
    const double z = grid_point(w, i, n);
    const double f = matching_residual(z, v0, parity).value;
    if (sign_of(prev_f) == 0) {
      brackets.push_back({prev_z, prev_z, prev_f, prev_f});
    } else if (sign_of(prev_f) * sign_of(f) < 0) {
      brackets.push_back({prev_z, z, prev_f, f});
    }
    prev_z = z;
    prev_f = f;
  }
  if (sign_of(prev_f) == 0) brackets.push_back({prev_z, prev_z, prev_f, prev_f});
  return brackets;
}

double bisect(double v0, Parity parity, Bracket b) {
  while (b.lo < b.hi) {
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    if (!(mid > b.lo && mid < b.hi)) break;
    const double f = matching_residual(mid, v0, parity).value;
    if (f == 0.0) return mid;
    if (sign_of(f) == sign_of(b.f_lo)) {
      b.lo = mid;
      b.f_lo = f;
    } else {
      b.hi = mid;
      b.f_hi = f;
    }
  }
  return std::abs(b.f_lo) <= std::abs(b.f_hi) ? b.lo : b.hi;
}

template <typename Fn>
auto annotate(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(where + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  } catch (const QuadratureError& e) {
    throw QuadratureError(where + ": " + e.what(), e.estimate(), e.error_estimate());
  }
}

std::string format_value(const char* name, double value) {
  std::ostringstream out;
  out.precision(17);
  out << name << "=" << value;
  return out.str();
}

}  // namespace

double alpha_of(double z0, double v0) {
  if (!(v0 > 0.0) || !std::isfinite(v0)) throw DomainError("alpha_of: v0 must be positive");
  const double c = std::cbrt(v0);
  if (!(z0 > -c && z0 < 0.0)) {
    throw DomainError(format_value("alpha_of: z0 outside the bound-state window, z0", z0));
  }
  const double epsilon = epsilon_of_z0(z0, v0);
  return -std::sqrt(-epsilon) / c;
}

MatchingResidual matching_residual(double z0, double v0, Parity parity) {
  const double alpha = alpha_of(z0, v0);
  const double zL = z0 + std::cbrt(v0);
  const AiryQuad at_edge = airy_eval(zL);
  const AiryQuad at_origin = airy_eval(z0);
  const double a_edge = at_edge.ai_prime - alpha * at_edge.ai;
  const double b_edge = at_edge.bi_prime - alpha * at_edge.bi;
  const double a_origin = parity == Parity::even ? at_origin.ai_prime : at_origin.ai;
  const double b_origin = parity == Parity::even ? at_origin.bi_prime : at_origin.bi;
  const double scale = std::hypot(a_edge, b_edge) * std::hypot(a_origin, b_origin);
  return MatchingResidual{z0, parity, a_edge * b_origin - b_edge * a_origin, scale};
}

double matching_ratio_difference(double z0, double v0, Parity parity) {
  const double alpha = alpha_of(z0, v0);
  const double zL = z0 + std::cbrt(v0);
  const AiryQuad at_edge = airy_eval(zL);
  const AiryQuad at_origin = airy_eval(z0);
  const double lhs = (at_edge.ai_prime - alpha * at_edge.ai) / (at_edge.bi_prime - alpha * at_edge.bi);
  const double rhs = parity == Parity::even ? at_origin.ai_prime / at_origin.bi_prime
                                            : at_origin.ai / at_origin.bi;
  return lhs - rhs;
}

std::size_t scan_points(double v0) {
  const double n = std::ceil(40.0 * (1.0 + std::sqrt(v0)));
  return std::max<std::size_t>(64, static_cast<std::size_t>(n));
}

BoundStateList find_bound_states(const WellSpec& spec, double tol) {
  const double v0 = nondimensionalize(spec);
  if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError(format_value("find_bound_states: tol", tol));
  if (std::cbrt(v0) > kAiryArgumentLimit) {
    throw DomainError(format_value("find_bound_states: v0 too large for the Airy range, v0", v0));
  }

  struct Root {
    double z0;
    Parity parity;
  };
  std::vector<Root> roots;
  const std::size_t n = scan_points(v0);
  for (Parity parity : {Parity::even, Parity::odd}) {
    const auto brackets = scan(v0, parity, n);
    const auto check = scan(v0, parity, 2 * n - 1);
    if (brackets.size() != check.size()) {
      std::ostringstream msg;
      msg << "missed root: " << to_string(parity) << " scan found " << brackets.size()
          << " sign changes, double-density rescan found " << check.size() << " (v0=" << v0 << ")";
      throw ConsistencyError(msg.str());
    }
    for (const Bracket& b : brackets) roots.push_back({bisect(v0, parity, b), parity});
  }

  BoundStateList result;
  result.v0 = v0;
  std::vector<Root> kept;
  for (const Root& r : roots) {
    const double epsilon = epsilon_of_z0(r.z0, v0);
    if (-epsilon < kThresholdFraction * v0) {
      result.warnings.push_back(format_value("discarded threshold root at z0", r.z0));
      continue;
    }
    kept.push_back(r);
  }
  // Increasing epsilon is decreasing z0.
  std::sort(kept.begin(), kept.end(), [](const Root& a, const Root& b) { return a.z0 > b.z0; });

  if (kept.empty()) {
    throw ConsistencyError(format_value("no bound state found, v0", v0));
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Parity expected = i % 2 == 0 ? Parity::even : Parity::odd;
    if (kept[i].parity != expected) {
      std::ostringstream msg;
      msg << "parity ordering broken at index " << i << " (z0=" << kept[i].z0 << ", v0=" << v0 << ")";
      throw ConsistencyError(msg.str());
    }
    if (i > 0 && std::abs(kept[i].z0 - kept[i - 1].z0) <= tol) {
      result.warnings.push_back(format_value("even and odd roots coincide within tol near z0", kept[i].z0));
    }
    result.states.push_back(make_bound_state(static_cast<int>(i), kept[i].parity, kept[i].z0, spec));
  }
  return result;
}

std::size_t count_bound_states(const WellSpec& spec) { return find_bound_states(spec).states.size(); }

std::vector<SweepRow> sweep_v0(double v0_min, double v0_max, int steps, double tol) {
  if (!(v0_min > 0.0 && v0_min < v0_max) || !std::isfinite(v0_max)) {
    throw DomainError("sweep_v0: need 0 < v0_min < v0_max");
  }
  if (steps < 2) throw DomainError("sweep_v0: steps must be >= 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double v0 = i + 1 == steps ? v0_max : v0_min + (v0_max - v0_min) * (double(i) / double(steps - 1));
    auto states = annotate(format_value("sweep_v0 at v0", v0),
                           [&] { return find_bound_states(spec_from_v0(v0), tol).states; });
    rows.push_back({v0, std::move(states)});
  }
  return rows;
}

std::vector<SweepRow> sweep_L(const WellSpec& base, double L_min, double L_max, int steps, double tol) {
  base.validate();
  if (!(L_min > 0.0 && L_min < L_max) || !std::isfinite(L_max)) {
    throw DomainError("sweep_L: need 0 < L_min < L_max");
  }
  if (steps < 2) throw DomainError("sweep_L: steps must be >= 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    WellSpec spec = base;
    spec.L = i + 1 == steps ? L_max : L_min + (L_max - L_min) * (double(i) / double(steps - 1));
    auto states = annotate(format_value("sweep_L at L", spec.L),
                           [&] { return find_bound_states(spec, tol).states; });
    rows.push_back({spec.L, std::move(states)});
  }
  return rows;
}

}  // namespace triwell
