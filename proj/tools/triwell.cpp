// triwell: bound states of the triangular well from the command line.
//
//   triwell solve --V0 10 --L 1
//   triwell sweep-v0 --v0-min 0.5 --v0-max 60 --steps 120
//   triwell sweep-L --V0 0.5 --L-min 0.1 --L-max 10 --steps 100
//   triwell wavefunction --v0 20 --state 1 --xmin -3 --xmax 3 --n 601
//   triwell oracle-check --v0 20
//   triwell delta-limit --lambda 1
//
// Exit codes: 0 success, 1 invalid input, 2 numeric failure, 3 failed check.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "triwell/cli/run.hpp"

namespace {

using triwell::cli::Command;
using triwell::cli::Format;
using triwell::cli::RunConfig;

void add_well_options(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--V0", rc.V0, "Well depth V0 (energy)");
  sub->add_option("--L", rc.L, "Half-range L (length)");
  sub->add_option("--v0", rc.v0, "Dimensionless depth 2 m L^2 V0 / hbar^2");
  sub->add_option("--hbar", rc.hbar, "Reduced Planck constant")->capture_default_str();
  sub->add_option("--mass", rc.mass, "Particle mass")->capture_default_str();
}

void add_common_options(CLI::App* sub, RunConfig& rc) {
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  sub->add_option("--format", rc.format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  sub->add_option("--output,-o", rc.output, "Write data to this file instead of standard output");
  sub->add_option("--tol", rc.tol, "Root bracket width in z0")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the one-dimensional triangular potential well"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "triwell " + triwell::cli::version());

  RunConfig rc;

  auto* solve = app.add_subcommand("solve", "List all bound states");
  add_well_options(solve, rc);
  add_common_options(solve, rc);

  auto* sweep_v0 = app.add_subcommand("sweep-v0", "Dimensionless energies over a uniform v0 grid");
  sweep_v0->add_option("--v0-min", rc.v0_min)->capture_default_str();
  sweep_v0->add_option("--v0-max", rc.v0_max)->capture_default_str();
  sweep_v0->add_option("--steps", rc.steps)->capture_default_str();
  add_common_options(sweep_v0, rc);

  auto* sweep_L = app.add_subcommand("sweep-L", "Physical energies over a uniform L grid at fixed V0");
  sweep_L->add_option("--V0", rc.V0, "Well depth V0")->required();
  sweep_L->add_option("--hbar", rc.hbar)->capture_default_str();
  sweep_L->add_option("--mass", rc.mass)->capture_default_str();
  sweep_L->add_option("--L-min", rc.L_min)->capture_default_str();
  sweep_L->add_option("--L-max", rc.L_max)->capture_default_str();
  sweep_L->add_option("--steps", rc.steps)->capture_default_str();
  add_common_options(sweep_L, rc);

  auto* wave = app.add_subcommand("wavefunction", "Sample a normalised eigenfunction");
  add_well_options(wave, rc);
  add_common_options(wave, rc);
  wave->add_option("--state", rc.state, "State index, 0 = ground state")->capture_default_str();
  wave->add_option("--xmin", rc.x_min)->capture_default_str();
  wave->add_option("--xmax", rc.x_max)->capture_default_str();
  wave->add_option("--n", rc.n, "Number of samples")->capture_default_str();
  wave->add_option("--quad-tol", rc.quad_tol, "Relative tolerance of the normalisation integral")
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-check", "Compare against a finite-difference spectrum");
  add_well_options(oracle, rc);
  add_common_options(oracle, rc);
  oracle->add_option("--eps-cut", rc.eps_cut, "Only states with |eps| >= eps-cut are compared")
      ->capture_default_str();
  oracle->add_option("--n-points", rc.n_points, "Fine grid size (odd)")->capture_default_str();

  auto* delta = app.add_subcommand("delta-limit", "Approach to the delta well at fixed V0 L = lambda");
  delta->add_option("--lambda", rc.lambda, "Delta strength")->capture_default_str();
  delta->add_option("--L-values", rc.L_values, "Strictly decreasing half-ranges")->delimiter(',');
  delta->add_option("--hbar", rc.hbar)->capture_default_str();
  delta->add_option("--mass", rc.mass)->capture_default_str();
  add_common_options(delta, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? triwell::cli::kExitSuccess : triwell::cli::kExitValidation;
  }

  if (solve->parsed()) rc.command = Command::solve;
  if (sweep_v0->parsed()) rc.command = Command::sweep_v0;
  if (sweep_L->parsed()) rc.command = Command::sweep_L;
  if (wave->parsed()) rc.command = Command::wavefunction;
  if (oracle->parsed()) rc.command = Command::oracle_check;
  if (delta->parsed()) rc.command = Command::delta_limit;

  return triwell::cli::run(rc, std::cout, std::cerr);
}
