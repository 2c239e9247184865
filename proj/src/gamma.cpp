#include <array>
#include <cmath>
#include <numbers>

#include "triwell/airy.hpp"
#include "triwell/errors.hpp"

namespace triwell {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double lanczos_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("lanczos_gamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw DomainError("lanczos_gamma: pole at non-positive integer");

  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  const double y = x - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (y + static_cast<double>(i));
  }
  const double t = y + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, y + 0.5) * std::exp(-t) * series;
}

}  // namespace triwell
