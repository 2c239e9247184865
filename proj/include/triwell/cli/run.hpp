#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "triwell/cli/table.hpp"
#include "triwell/model.hpp"

namespace triwell::cli {

enum class Command { solve, sweep_v0, sweep_L, wavefunction, oracle_check, delta_limit };
enum class Format { csv, json };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitCheckFailed = 3;

std::string to_string(Command command);

struct RunConfig {
  Command command = Command::solve;

  // Well: either the (V0, L) pair or the dimensionless v0. Both may be given
  // if they agree.
  std::optional<double> V0;
  std::optional<double> L;
  std::optional<double> v0;
  double hbar = 1.0;
  double mass = 1.0;

  double tol = 1e-12;       // z0 bracket
  double quad_tol = 1e-10;  // normalisation quadrature

  Format format = Format::csv;
  std::string output;  // empty: the stream passed to run()

  // sweep-v0
  double v0_min = 0.1;
  double v0_max = 100.0;
  // sweep-L
  double L_min = 0.1;
  double L_max = 10.0;
  int steps = 100;

  // wavefunction
  int state = 0;
  double x_min = -3.0;
  double x_max = 3.0;
  std::size_t n = 601;

  // oracle-check
  double eps_cut = 0.5;
  std::size_t n_points = 16001;

  // delta-limit
  double lambda = 1.0;
  std::vector<double> L_values = {1e-1, 1e-2, 1e-3, 1e-4};
};

/// The well named by the config. v0 alone implies L = 1 (or the given L);
/// v0 with V0 derives L; all three must agree to 1e-12 relative.
WellSpec resolve_well(const RunConfig& config);

/// Builds the output document; throws the library's exceptions on failure.
/// `check_passed` is cleared by oracle-check and delta-limit when the check
/// fails.
Document build_document(const RunConfig& config, bool& check_passed);

/// Runs one command, writing data to `out` (or config.output) and diagnostics
/// to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace triwell::cli
