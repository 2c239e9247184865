#include "triwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "triwell/errors.hpp"

namespace triwell {

namespace {

std::vector<double> squared(const std::vector<double>& values) {
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](double v) { return v * v; });
  return out;
}

double pivot_floor_for(const std::vector<double>& off_sq) {
  const double largest = off_sq.empty() ? 0.0 : *std::max_element(off_sq.begin(), off_sq.end());
  return std::numeric_limits<double>::min() * std::max(1.0, largest);
}

double gershgorin_lower(const TridiagonalHamiltonian& tri) {
  const std::size_t n = tri.diagonal.size();
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(tri.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(tri.off_diagonal[i]);
    lower = std::min(lower, tri.diagonal[i] - radius);
  }
  return lower;
}

std::size_t coarse_points(std::size_t n) {
  std::size_t m = (n + 1) / 2;
  if (m % 2 == 0) ++m;
  return std::max<std::size_t>(m, 3);
}

std::vector<double> fd_epsilons(const WellSpec& spec, double half_width, std::size_t n, simd::Isa isa) {
  const TridiagonalHamiltonian tri = build_hamiltonian(spec, half_width, n);
  const double unit = energy_unit(spec);
  const double tol = 1e-12 * (spec.V0 + unit);
  std::vector<double> eps = eigenvalues_below(tri, 0.0, tol, isa);
  for (double& e : eps) e /= unit;
  return eps;
}

}  // namespace

TridiagonalHamiltonian build_hamiltonian(const WellSpec& spec, double half_width, std::size_t n_points) {
  spec.validate();
  if (!std::isfinite(half_width) || !(half_width > spec.L)) {
    throw DomainError("build_hamiltonian: half_width must exceed L");
  }
  if (n_points < 3 || n_points % 2 == 0) {
    throw DomainError("build_hamiltonian: n_points must be odd and >= 3");
  }
  TridiagonalHamiltonian tri;
  tri.spec = spec;
  tri.half_width = half_width;
  tri.grid_step = 2.0 * half_width / static_cast<double>(n_points + 1);
  const double t = spec.hbar * spec.hbar / (2.0 * spec.mass * tri.grid_step * tri.grid_step);
  const double centre = static_cast<double>((n_points - 1) / 2);
  tri.diagonal.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = (static_cast<double>(i) - centre) * tri.grid_step;
    tri.diagonal[i] = 2.0 * t + potential_value(x, spec);
  }
  tri.off_diagonal.assign(n_points - 1, -t);
  return tri;
}

std::int64_t sturm_count(const TridiagonalHamiltonian& tri, double shift, simd::Isa isa) {
  const std::vector<double> off_sq = squared(tri.off_diagonal);
  const double shifts[1] = {shift};
  std::int64_t counts[1] = {0};
  simd::sturm_counts(isa, tri.diagonal, off_sq, pivot_floor_for(off_sq), shifts, counts);
  return counts[0];
}

std::vector<double> eigenvalues_below(const TridiagonalHamiltonian& tri, double threshold, double tol,
                                      simd::Isa isa) {
  if (!(tol > 0.0)) throw DomainError("eigenvalues_below: tol must be positive");
  if (tri.diagonal.empty() || tri.off_diagonal.size() + 1 != tri.diagonal.size()) {
    throw DomainError("eigenvalues_below: malformed tridiagonal matrix");
  }
  const std::vector<double> off_sq = squared(tri.off_diagonal);
  const double floor = pivot_floor_for(off_sq);

  std::int64_t total = 0;
  {
    const double shifts[1] = {threshold};
    std::int64_t counts[1] = {0};
    simd::sturm_counts(isa, tri.diagonal, off_sq, floor, shifts, counts);
    total = counts[0];
  }
  if (total == 0) return {};

  const double start = std::min(gershgorin_lower(tri), threshold) - tol;
  std::vector<double> lo(static_cast<std::size_t>(total), start);
  std::vector<double> hi(static_cast<std::size_t>(total), threshold);
  std::vector<std::size_t> active;
  std::vector<double> shifts;
  std::vector<std::int64_t> counts;

  // Invariant for eigenvalue k (0-based): count(lo[k]) <= k < count(hi[k]).
  for (;;) {
    active.clear();
    shifts.clear();
    for (std::size_t k = 0; k < lo.size(); ++k) {
      const double mid = lo[k] + 0.5 * (hi[k] - lo[k]);
      if (hi[k] - lo[k] > tol && mid > lo[k] && mid < hi[k]) {
        active.push_back(k);
        shifts.push_back(mid);
      }
    }
    if (active.empty()) break;
    counts.assign(shifts.size(), 0);
    simd::sturm_counts(isa, tri.diagonal, off_sq, floor, shifts, counts);
    for (std::size_t j = 0; j < active.size(); ++j) {
      const std::size_t k = active[j];
      if (counts[j] > static_cast<std::int64_t>(k)) {
        hi[k] = shifts[j];
      } else {
        lo[k] = shifts[j];
      }
    }
  }

  std::vector<double> values(lo.size());
  for (std::size_t k = 0; k < lo.size(); ++k) values[k] = lo[k] + 0.5 * (hi[k] - lo[k]);
  return values;
}

std::vector<double> eigenvector(const TridiagonalHamiltonian& tri, double eigenvalue) {
  const std::size_t n = tri.diagonal.size();
  if (n == 0) throw DomainError("eigenvector: empty matrix");
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  const double tiny = std::numeric_limits<double>::min() * 1e20;

  // LU of (T - shift I) without pivoting; Thomas algorithm.
  std::vector<double> pivot(n);
  std::vector<double> upper(n > 1 ? n - 1 : 0);
  pivot[0] = tri.diagonal[0] - shift;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(pivot[i - 1]) < tiny) pivot[i - 1] = tiny;
    upper[i - 1] = tri.off_diagonal[i - 1] / pivot[i - 1];
    pivot[i] = tri.diagonal[i] - shift - upper[i - 1] * tri.off_diagonal[i - 1];
  }
  if (std::abs(pivot[n - 1]) < tiny) pivot[n - 1] = tiny;

  std::vector<double> v(n, 1.0);
  for (int iteration = 0; iteration < 4; ++iteration) {
    for (std::size_t i = 1; i < n; ++i) v[i] -= upper[i - 1] * v[i - 1];
    v[n - 1] /= pivot[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) v[i] = (v[i] - tri.off_diagonal[i] * v[i + 1]) / pivot[i];
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

OracleReport compare_spectra(const WellSpec& spec, const std::vector<BoundState>& airy_states, double eps_cut,
                             std::size_t n_points, simd::Isa isa) {
  spec.validate();
  if (!(eps_cut > 0.0) || !std::isfinite(eps_cut)) throw DomainError("compare_spectra: eps_cut must be positive");

  OracleReport report;
  report.eps_cut = eps_cut;
  report.half_width = spec.L * (1.0 + 30.0 / std::sqrt(eps_cut));
  report.n_fine = n_points;
  report.n_coarse = coarse_points(n_points);
  report.airy_count = airy_states.size();

  const std::vector<double> fine = fd_epsilons(spec, report.half_width, report.n_fine, isa);
  const std::vector<double> coarse = fd_epsilons(spec, report.half_width, report.n_coarse, isa);
  report.fd_count = fine.size();
  report.counts_agree = report.fd_count == report.airy_count;

  const double h_fine = 2.0 * report.half_width / static_cast<double>(report.n_fine + 1);
  const double h_coarse = 2.0 * report.half_width / static_cast<double>(report.n_coarse + 1);
  const double r2 = (h_coarse / h_fine) * (h_coarse / h_fine);

  std::vector<double> extrapolated(std::min(fine.size(), coarse.size()));
  for (std::size_t i = 0; i < extrapolated.size(); ++i) {
    extrapolated[i] = (r2 * fine[i] - coarse[i]) / (r2 - 1.0);
  }

  const auto below = [](const std::vector<double>& values, double level) {
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](double e) { return e <= level; }));
  };
  std::vector<double> airy_eps;
  for (const BoundState& s : airy_states) airy_eps.push_back(s.epsilon);
  const std::size_t airy_cut = below(airy_eps, -eps_cut);
  // States within the comparison tolerance of the cut may fall on either side.
  const std::size_t fd_cut_strict = below(extrapolated, -eps_cut - kOracleTolerance);
  const std::size_t fd_cut_loose = below(extrapolated, -eps_cut + kOracleTolerance);
  if (fd_cut_strict > airy_cut || fd_cut_loose < airy_cut) {
    std::ostringstream msg;
    msg << "compare_spectra: " << airy_cut << " Airy states below eps=-" << eps_cut << " but the FD oracle has "
        << fd_cut_strict << ".." << fd_cut_loose << " (v0=" << nondimensionalize(spec) << ")";
    throw MismatchError(msg.str());
  }

  report.passed = true;
  for (const BoundState& s : airy_states) {
    OracleRow row;
    row.index = s.index;
    row.parity = s.parity;
    row.epsilon_airy = s.epsilon;
    const std::size_t i = static_cast<std::size_t>(s.index);
    if (i < extrapolated.size()) {
      row.epsilon_fd = extrapolated[i];
      row.epsilon_fine = fine[i];
      row.epsilon_coarse = coarse[i];
      row.abs_difference = std::abs(row.epsilon_airy - row.epsilon_fd);
    } else {
      row.epsilon_fd = row.epsilon_fine = row.epsilon_coarse = std::numeric_limits<double>::quiet_NaN();
      row.abs_difference = std::numeric_limits<double>::infinity();
    }
    row.compared = std::abs(s.epsilon) >= eps_cut;
    row.within_tolerance = row.abs_difference <= kOracleTolerance;
    if (row.compared) {
      report.max_difference = std::max(report.max_difference, row.abs_difference);
      report.passed = report.passed && row.within_tolerance;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace triwell
