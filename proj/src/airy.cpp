#include "triwell/airy.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "triwell/errors.hpp"

namespace triwell {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kNodeSpacing = 0.25;
constexpr std::size_t kNodeCount =
    static_cast<std::size_t>((kAsymptoticLimit - kSeriesLimit) / kNodeSpacing) + 1;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct SeriesSums {
  double f = 0.0;
  double f_prime = 0.0;
  double g = 0.0;
  double g_prime = 0.0;
};

AiryQuad combine(double z, const SeriesSums& s) {
  const double c1 = airy_c1();
  const double c2 = airy_c2();
  return AiryQuad{
      .z = z,
      .ai = c1 * s.f - c2 * s.g,
      .ai_prime = c1 * s.f_prime - c2 * s.g_prime,
      .bi = kSqrt3 * (c1 * s.f + c2 * s.g),
      .bi_prime = kSqrt3 * (c1 * s.f_prime + c2 * s.g_prime),
  };
}

// Term recurrences, k = 0, 1, ...:
//   f_k   = z^{3k}   a_k,  a_{k+1} = a_k / ((3k+2)(3k+3))
//   g_k   = z^{3k+1} b_k,  b_{k+1} = b_k / ((3k+3)(3k+4))
//   f'_k  = 3k z^{3k-1} a_k      (k >= 1)
//   g'_k  = (3k+1) z^{3k} b_k
// When max_terms is 0 the sums run to convergence.
SeriesSums maclaurin(double z, int max_terms) {
  const double z3 = z * z * z;
  CompensatedSum f, fp, g, gp;
  double tf = 1.0;
  double tg = z;
  double tfp = 0.5 * z * z;  // f'_1
  double tgp = 1.0;
  f.add(tf);
  g.add(tg);
  gp.add(tgp);
  const int limit = max_terms > 0 ? max_terms : 400;
  int small_streak = 0;
  for (int k = 0; k + 1 < limit; ++k) {
    const double kk = 3.0 * k;
    tf *= z3 / ((kk + 2.0) * (kk + 3.0));
    tg *= z3 / ((kk + 3.0) * (kk + 4.0));
    if (k > 0) tfp *= z3 / (kk * (kk + 2.0));
    tgp *= z3 / ((kk + 1.0) * (kk + 3.0));
    f.add(tf);
    g.add(tg);
    fp.add(tfp);
    gp.add(tgp);
    if (max_terms == 0) {
      const double scale = 1.0 + std::abs(f.value()) + std::abs(g.value()) +
                           std::abs(fp.value()) + std::abs(gp.value());
      const double largest = std::max({std::abs(tf), std::abs(tg), std::abs(tfp), std::abs(tgp)});
      small_streak = largest < 1e-18 * scale ? small_streak + 1 : 0;
      if (small_streak >= 2) break;
    }
  }
  return SeriesSums{f.value(), fp.value(), g.value(), gp.value()};
}

struct ValueAndSlope {
  double value;
  double slope;
};

// Taylor expansion of a solution of w'' = z w about `center`, evaluated at
// center + step. Coefficients a_n = w^{(n)}(center)/n! follow
//   a_{n+2} = (center a_n + a_{n-1}) / ((n+1)(n+2)),  a_{-1} = 0.
ValueAndSlope taylor_shift(double center, double w, double w_prime, double step) {
  double a_prev = 0.0;
  double a_cur = w;
  double a_next = w_prime;
  double value = w + w_prime * step;
  double slope = w_prime;
  double power = step;  // step^{n+1}
  const double scale = std::abs(w) + std::abs(w_prime);
  int small_streak = 0;
  for (int n = 0; n < 200; ++n) {
    const double a_new = (center * a_cur + a_prev) / ((n + 1.0) * (n + 2.0));
    const double slope_term = (n + 2.0) * a_new * power;
    power *= step;
    const double value_term = a_new * power;
    value += value_term;
    slope += slope_term;
    a_prev = a_cur;
    a_cur = a_next;
    a_next = a_new;
    const bool small = std::abs(value_term) <= 1e-19 * scale && std::abs(slope_term) <= 1e-19 * scale;
    small_streak = small ? small_streak + 1 : 0;
    if (n >= 4 && small_streak >= 3) break;
  }
  return {value, slope};
}

AiryQuad asymptotic_positive(double z) {
  const double xi = (2.0 / 3.0) * z * std::sqrt(z);
  CompensatedSum su, su_alt, sv, sv_alt;
  double u = 1.0;
  double inv_xi_power = 1.0;
  double last_magnitude = 2.0;
  su.add(1.0);
  su_alt.add(1.0);
  sv.add(1.0);
  sv_alt.add(1.0);
  for (int k = 1; k < 200; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    inv_xi_power /= xi;
    const double tu = u * inv_xi_power;
    const double tv = v * inv_xi_power;
    const double magnitude = std::max(std::abs(tu), std::abs(tv));
    if (magnitude > last_magnitude) break;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    su.add(tu);
    sv.add(tv);
    su_alt.add(sign * tu);
    sv_alt.add(sign * tv);
    if (magnitude < 1e-18) break;
    last_magnitude = magnitude;
  }
  const double quarter = std::sqrt(std::sqrt(z));
  const double decay = std::exp(-xi);
  const double growth = std::exp(xi);
  return AiryQuad{
      .z = z,
      .ai = decay / (2.0 * kSqrtPi * quarter) * su_alt.value(),
      .ai_prime = -quarter * decay / (2.0 * kSqrtPi) * sv_alt.value(),
      .bi = growth / (kSqrtPi * quarter) * su.value(),
      .bi_prime = quarter * growth / kSqrtPi * sv.value(),
  };
}

AiryQuad asymptotic_negative(double z) {
  const double x = -z;
  const double xi = (2.0 / 3.0) * x * std::sqrt(x);
  // Even-index terms go to the P sums, odd-index terms to the Q sums, with
  // the (-1)^k of the paired index.
  CompensatedSum pu, qu, pv, qv;
  double u = 1.0;
  double inv_xi_power = 1.0;
  double last_magnitude = 2.0;
  pu.add(1.0);
  pv.add(1.0);
  for (int k = 1; k < 200; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    inv_xi_power /= xi;
    const double tu = u * inv_xi_power;
    const double tv = v * inv_xi_power;
    const double magnitude = std::max(std::abs(tu), std::abs(tv));
    if (magnitude > last_magnitude) break;
    const int pair = k / 2;
    const double sign = (pair % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      pu.add(sign * tu);
      pv.add(sign * tv);
    } else {
      qu.add(sign * tu);
      qv.add(sign * tv);
    }
    if (magnitude < 1e-18) break;
    last_magnitude = magnitude;
  }
  // cos(xi - pi/4) and sin(xi - pi/4) without forming xi - pi/4.
  const double s = std::sin(xi);
  const double c = std::cos(xi);
  const double cos_phase = (c + s) / std::numbers::sqrt2;
  const double sin_phase = (s - c) / std::numbers::sqrt2;
  const double quarter = std::sqrt(std::sqrt(x));
  const double lo = 1.0 / (kSqrtPi * quarter);
  const double hi = quarter / kSqrtPi;
  return AiryQuad{
      .z = z,
      .ai = lo * (cos_phase * pu.value() + sin_phase * qu.value()),
      .ai_prime = hi * (sin_phase * pv.value() - cos_phase * qv.value()),
      .bi = lo * (-sin_phase * pu.value() + cos_phase * qu.value()),
      .bi_prime = hi * (cos_phase * pv.value() + sin_phase * qv.value()),
  };
}

AiryQuad series_eval(double z) { return combine(z, maclaurin(z, 0)); }

struct NodeTable {
  std::array<AiryQuad, kNodeCount> positive;
  std::array<AiryQuad, kNodeCount> negative;
};

NodeTable build_node_table() {
  NodeTable table{};
  const std::size_t last = kNodeCount - 1;

  table.positive[0] = series_eval(kSeriesLimit);
  table.positive[last] = asymptotic_positive(kAsymptoticLimit);
  // Bi is dominant for increasing z, Ai for decreasing z.
  for (std::size_t i = 1; i < last; ++i) {
    const AiryQuad& from = table.positive[i - 1];
    const auto bi = taylor_shift(from.z, from.bi, from.bi_prime, kNodeSpacing);
    table.positive[i].z = kSeriesLimit + kNodeSpacing * static_cast<double>(i);
    table.positive[i].bi = bi.value;
    table.positive[i].bi_prime = bi.slope;
  }
  AiryQuad ai_walker = table.positive[last];
  for (std::size_t i = last - 1; i >= 1; --i) {
    const auto ai = taylor_shift(ai_walker.z, ai_walker.ai, ai_walker.ai_prime, -kNodeSpacing);
    table.positive[i].ai = ai.value;
    table.positive[i].ai_prime = ai.slope;
    ai_walker = table.positive[i];
  }

  table.negative[0] = series_eval(-kSeriesLimit);
  table.negative[last] = asymptotic_negative(-kAsymptoticLimit);
  for (std::size_t i = 1; i < last; ++i) {
    const AiryQuad& from = table.negative[i - 1];
    const auto ai = taylor_shift(from.z, from.ai, from.ai_prime, -kNodeSpacing);
    const auto bi = taylor_shift(from.z, from.bi, from.bi_prime, -kNodeSpacing);
    table.negative[i] = AiryQuad{-kSeriesLimit - kNodeSpacing * static_cast<double>(i), ai.value,
                                 ai.slope, bi.value, bi.slope};
  }
  return table;
}

const NodeTable& node_table() {
  static const NodeTable table = build_node_table();
  return table;
}

AiryQuad table_eval(double z) {
  const NodeTable& table = node_table();
  const auto& nodes = z > 0.0 ? table.positive : table.negative;
  const double offset = (std::abs(z) - kSeriesLimit) / kNodeSpacing;
  std::size_t index = static_cast<std::size_t>(std::lround(offset));
  if (index >= kNodeCount) index = kNodeCount - 1;
  const AiryQuad& node = nodes[index];
  const double step = z - node.z;
  const auto ai = taylor_shift(node.z, node.ai, node.ai_prime, step);
  const auto bi = taylor_shift(node.z, node.bi, node.bi_prime, step);
  return AiryQuad{z, ai.value, ai.slope, bi.value, bi.slope};
}

}  // namespace

double airy_c1() {
  static const double c1 = std::pow(3.0, -2.0 / 3.0) / lanczos_gamma(2.0 / 3.0);
  return c1;
}

double airy_c2() {
  static const double c2 = std::pow(3.0, -1.0 / 3.0) / lanczos_gamma(1.0 / 3.0);
  return c2;
}

AiryQuad airy_eval(double z) {
  if (!std::isfinite(z)) throw DomainError("airy_eval: non-finite argument");
  if (std::abs(z) > kAiryArgumentLimit) {
    throw RangeError("airy_eval: |z| = " + std::to_string(std::abs(z)) +
                     " exceeds 110, Bi is outside double range");
  }
  const double magnitude = std::abs(z);
  if (magnitude <= kSeriesLimit) return series_eval(z);
  if (magnitude >= kAsymptoticLimit) return z > 0.0 ? asymptotic_positive(z) : asymptotic_negative(z);
  return table_eval(z);
}

AiryQuad airy_series_truncated(double z, int order) {
  if (order < 1) throw DomainError("airy_series_truncated: order must be >= 1");
  if (!std::isfinite(z)) throw DomainError("airy_series_truncated: non-finite argument");
  return combine(z, maclaurin(z, order));
}

}  // namespace triwell
