#include "triwell/wavefunction.hpp"

#include <cmath>
#include <sstream>

#include "triwell/airy.hpp"
#include "triwell/errors.hpp"
#include "triwell/quadrature.hpp"
#include "triwell/spectrum.hpp"

namespace triwell {

namespace {

constexpr double kRootResidualTolerance = 1e-8;

double decay_rate(const WaveCoefficients& w) { return std::sqrt(-w.state.epsilon); }

double parity_sign(const WaveCoefficients& w) { return w.state.parity == Parity::even ? 1.0 : -1.0; }

// psi on x >= 0.
double right_half(const WaveCoefficients& w, double x) {
  if (x < w.L) {
    const AiryQuad q = airy_eval(z_of_x(x, w.state.z0, w.v0, w.L));
    return w.c_a * q.ai + w.c_b * q.bi;
  }
  return w.c * std::exp(-decay_rate(w) * x / w.L);
}

double right_half_derivative(const WaveCoefficients& w, double x) {
  if (x <= w.L) {
    const AiryQuad q = airy_eval(z_of_x(x, w.state.z0, w.v0, w.L));
    return std::cbrt(w.v0) / w.L * (w.c_a * q.ai_prime + w.c_b * q.bi_prime);
  }
  const double k = decay_rate(w);
  return -k / w.L * w.c * std::exp(-k * x / w.L);
}

double interior_integral(const WaveCoefficients& a, const WaveCoefficients& b, double rel_tol) {
  const auto integrand = [&](double x) { return right_half(a, x) * right_half(b, x); };
  return adaptive_simpson(integrand, 0.0, a.L, rel_tol).value;
}

void require_same_well(const WaveCoefficients& a, const WaveCoefficients& b) {
  if (a.v0 != b.v0 || a.L != b.L) throw DomainError("overlap: states belong to different wells");
}

}  // namespace

WaveCoefficients match_coefficients(const BoundState& state, double v0, double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("match_coefficients: L must be positive");
  const MatchingResidual residual = matching_residual(state.z0, v0, state.parity);
  if (!(std::abs(residual.value) <= kRootResidualTolerance * residual.scale)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "match_coefficients: z0=" << state.z0 << " is not a " << to_string(state.parity)
        << " root (|D|/scale=" << std::abs(residual.value) / residual.scale << ")";
    throw ConsistencyError(msg.str());
  }

  const AiryQuad origin = airy_eval(state.z0);
  WaveCoefficients w;
  w.state = state;
  w.v0 = v0;
  w.L = L;
  if (state.parity == Parity::even) {
    w.c_a = origin.bi_prime;
    w.c_b = -origin.ai_prime;
  } else {
    w.c_a = origin.bi;
    w.c_b = -origin.ai;
  }
  const AiryQuad edge = airy_eval(state.z0 + std::cbrt(v0));
  w.c = (w.c_a * edge.ai + w.c_b * edge.bi) * std::exp(decay_rate(w));
  return w;
}

double evaluate(const WaveCoefficients& coeffs, double x) {
  if (!std::isfinite(x)) throw DomainError("evaluate: non-finite x");
  if (x == 0.0 && coeffs.state.parity == Parity::odd) return 0.0;
  const double value = right_half(coeffs, std::abs(x));
  return x < 0.0 ? parity_sign(coeffs) * value : value;
}

double evaluate_derivative(const WaveCoefficients& coeffs, double x) {
  if (!std::isfinite(x)) throw DomainError("evaluate_derivative: non-finite x");
  if (x == 0.0 && coeffs.state.parity == Parity::even) return 0.0;
  const double slope = right_half_derivative(coeffs, std::abs(x));
  return x < 0.0 ? -parity_sign(coeffs) * slope : slope;
}

double norm_squared(const WaveCoefficients& coeffs, double rel_tol) {
  const double k = decay_rate(coeffs);
  const double tail = coeffs.c * coeffs.c * (coeffs.L / (2.0 * k)) * std::exp(-2.0 * k);
  return 2.0 * (interior_integral(coeffs, coeffs, rel_tol) + tail);
}

WaveCoefficients normalize(const WaveCoefficients& coeffs, double rel_tol) {
  const double n2 = norm_squared(coeffs, rel_tol);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw ConsistencyError("normalize: non-positive norm");
  const AiryQuad origin = airy_eval(coeffs.state.z0);
  const double anchor = coeffs.state.parity == Parity::even
                            ? coeffs.c_a * origin.ai + coeffs.c_b * origin.bi
                            : coeffs.c_a * origin.ai_prime + coeffs.c_b * origin.bi_prime;
  const double factor = (anchor < 0.0 ? -1.0 : 1.0) / std::sqrt(n2);
  WaveCoefficients out = coeffs;
  out.c_a *= factor;
  out.c_b *= factor;
  out.c *= factor;
  return out;
}

double overlap(const WaveCoefficients& a, const WaveCoefficients& b, double rel_tol) {
  require_same_well(a, b);
  if (a.state.parity != b.state.parity) return 0.0;
  const double k_sum = decay_rate(a) + decay_rate(b);
  const double tail = a.c * b.c * (a.L / k_sum) * std::exp(-k_sum);
  return 2.0 * (interior_integral(a, b, rel_tol) + tail);
}

std::vector<WaveSample> sample(const WaveCoefficients& coeffs, double x_min, double x_max, std::size_t n) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw DomainError("sample: need finite x_min < x_max");
  }
  if (n < 2) throw DomainError("sample: n must be >= 2");
  std::vector<WaveSample> out;
  out.reserve(n);
  const double span = x_max - x_min;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i + 1 == n ? x_max : x_min + span * (static_cast<double>(i) / static_cast<double>(n - 1));
    out.push_back({x, evaluate(coeffs, x)});
  }
  return out;
}

int count_nodes(const WaveCoefficients& coeffs, double x_min, double x_max, std::size_t n) {
  int nodes = 0;
  double last_sign = 0.0;
  for (const WaveSample& s : sample(coeffs, x_min, x_max, n)) {
    if (s.psi == 0.0) continue;
    const double sign = s.psi > 0.0 ? 1.0 : -1.0;
    if (last_sign != 0.0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

}  // namespace triwell
