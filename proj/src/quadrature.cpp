#include "triwell/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "triwell/errors.hpp"

namespace triwell {

namespace {

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

class Integrator {
 public:
  explicit Integrator(const std::function<double(double)>& f) : f_(f) {}

  double eval(double x) {
    ++evaluations_;
    return f_(x);
  }

  double refine(const Panel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
    const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * tol) {
      error_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth <= 0 || !(p.m > p.a && p.b > p.m)) {
      failed_ = true;
      error_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return refine({p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1) +
           refine({p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
  }

  bool failed() const { return failed_; }
  double error() const { return error_; }
  long evaluations() const { return evaluations_; }

 private:
  const std::function<double(double)>& f_;
  long evaluations_ = 0;
  double error_ = 0.0;
  bool failed_ = false;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, int max_depth) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw DomainError("adaptive_simpson: need finite a < b");
  }
  if (!(rel_tol > 0.0)) throw DomainError("adaptive_simpson: rel_tol must be positive");

  constexpr int kPanels = 16;
  Integrator integrator(f);
  const double width = (b - a) / kPanels;
  std::vector<Panel> panels;
  panels.reserve(kPanels);
  double f_left = integrator.eval(a);
  double coarse = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + width * i;
    const double hi = i + 1 == kPanels ? b : a + width * (i + 1);
    const double mid = 0.5 * (lo + hi);
    const double f_mid = integrator.eval(mid);
    const double f_right = integrator.eval(hi);
    const double whole = simpson(lo, f_left, f_mid, hi, f_right);
    panels.push_back({lo, f_left, mid, f_mid, hi, f_right, whole});
    coarse += whole;
    f_left = f_right;
  }

  const double scale = std::max(std::abs(coarse), std::numeric_limits<double>::min());
  const double panel_tol = rel_tol * scale / kPanels;
  double total = 0.0;
  for (const Panel& p : panels) total += integrator.refine(p, panel_tol, max_depth);

  if (integrator.failed()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "adaptive_simpson: no convergence on [" << a << ", " << b << "] after depth " << max_depth
        << "; estimate " << total << " +- " << integrator.error();
    throw QuadratureError(msg.str(), total, integrator.error());
  }
  return {total, integrator.error(), integrator.evaluations()};
}

}  // namespace triwell
