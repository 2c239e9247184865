#pragma once

#include <functional>

namespace triwell {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Adaptive Simpson with Richardson correction. The absolute target is
/// rel_tol times the magnitude of a 16-panel Simpson pre-estimate; each split
/// halves the local target. Throws QuadratureError, carrying the achieved
/// estimate, if any panel reaches max_depth without meeting its target.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, int max_depth = 50);

}  // namespace triwell
