#pragma once

// Finite-difference cross-check of the Airy spectrum. Independent of the
// Airy functions and of the root finder: it sees only the potential.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "triwell/model.hpp"
#include "triwell/simd/sturm_kernels.hpp"

namespace triwell {

/// Three-point discretisation of -hbar^2/(2m) d^2/dx^2 + V on n interior
/// points of [-X, X] with Dirichlet walls: x_i = (i - (n-1)/2) h,
/// h = 2X/(n+1), diagonal 2t + V(x_i), off-diagonal -t, t = hbar^2/(2 m h^2).
struct TridiagonalHamiltonian {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  double grid_step = 0.0;
  double half_width = 0.0;
  WellSpec spec;
};

/// n_points must be odd and >= 3 so that x = 0 is a grid point; half_width
/// must exceed spec.L.
TridiagonalHamiltonian build_hamiltonian(const WellSpec& spec, double half_width, std::size_t n_points);

/// Number of eigenvalues strictly below `shift`.
std::int64_t sturm_count(const TridiagonalHamiltonian& tri, double shift,
                         simd::Isa isa = simd::best_isa());

/// All eigenvalues below `threshold`, ascending, each bisected to a bracket
/// no wider than tol. Bisection of all eigenvalues advances together so the
/// Sturm kernel always sees a batch of shifts.
std::vector<double> eigenvalues_below(const TridiagonalHamiltonian& tri, double threshold, double tol,
                                      simd::Isa isa = simd::best_isa());

/// Inverse iteration for the eigenvector nearest `eigenvalue`, unit 2-norm.
std::vector<double> eigenvector(const TridiagonalHamiltonian& tri, double eigenvalue);

struct OracleRow {
  int index = 0;
  Parity parity = Parity::even;
  double epsilon_airy = 0.0;
  double epsilon_fd = 0.0;  // Richardson-extrapolated
  double epsilon_fine = 0.0;
  double epsilon_coarse = 0.0;
  double abs_difference = 0.0;
  bool compared = false;  // |epsilon_airy| >= eps_cut
  bool within_tolerance = false;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  double eps_cut = 0.0;
  double half_width = 0.0;
  std::size_t n_fine = 0;
  std::size_t n_coarse = 0;
  std::size_t airy_count = 0;
  std::size_t fd_count = 0;  // fine grid, below zero energy
  bool counts_agree = false;
  double max_difference = 0.0;
  bool passed = false;
};

inline constexpr double kOracleTolerance = 1e-3;
inline constexpr double kDefaultEpsCut = 0.5;
inline constexpr std::size_t kDefaultOraclePoints = 16001;

/// Compares each state with |eps| >= eps_cut against the FD spectrum on a box
/// of half-width X = L (1 + 30 / sqrt(eps_cut)), extrapolating the n_points
/// grid and a grid of about half the density. Throws MismatchError if the
/// two methods see different numbers of states below -eps_cut.
OracleReport compare_spectra(const WellSpec& spec, const std::vector<BoundState>& airy_states,
                             double eps_cut = kDefaultEpsCut, std::size_t n_points = kDefaultOraclePoints,
                             simd::Isa isa = simd::best_isa());

}  // namespace triwell
