#include "triwell/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "triwell/errors.hpp"
#include "triwell/limits.hpp"
#include "triwell/oracle.hpp"
#include "triwell/spectrum.hpp"
#include "triwell/wavefunction.hpp"

namespace triwell::cli {

namespace {

using Row = std::vector<Cell>;

Cell num(double v) { return v; }
Cell integer(std::int64_t v) { return v; }
Cell text(std::string_view s) { return std::string(s); }

std::string format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

void append_well(std::vector<Entry>& config, const RunConfig& rc, const WellSpec& spec) {
  config.push_back({"V0", num(spec.V0)});
  config.push_back({"L", num(spec.L)});
  config.push_back({"hbar", num(spec.hbar)});
  config.push_back({"mass", num(spec.mass)});
  config.push_back({"v0", num(nondimensionalize(spec))});
  config.push_back({"tol", num(rc.tol)});
}

std::vector<Entry> base_config(const RunConfig& rc) {
  return {{"command", text(to_string(rc.command))}, {"format", text(format_name(rc.format))}};
}

Document solve_document(const RunConfig& rc) {
  const WellSpec spec = resolve_well(rc);
  Document doc;
  doc.config = base_config(rc);
  append_well(doc.config, rc, spec);
  doc.columns = {"index", "parity", "z0", "epsilon", "energy"};
  for (const BoundState& s : find_bound_states(spec, rc.tol).states) {
    doc.rows.push_back(Row{integer(s.index), text(to_string(s.parity)), num(s.z0), num(s.epsilon), num(s.energy)});
  }
  return doc;
}

Document sweep_v0_document(const RunConfig& rc) {
  Document doc;
  doc.config = base_config(rc);
  doc.config.push_back({"v0_min", num(rc.v0_min)});
  doc.config.push_back({"v0_max", num(rc.v0_max)});
  doc.config.push_back({"steps", integer(rc.steps)});
  doc.config.push_back({"tol", num(rc.tol)});
  doc.columns = {"v0", "index", "parity", "epsilon", "abs_epsilon"};
  for (const SweepRow& row : sweep_v0(rc.v0_min, rc.v0_max, rc.steps, rc.tol)) {
    for (const BoundState& s : row.states) {
      doc.rows.push_back(Row{num(row.parameter), integer(s.index), text(to_string(s.parity)), num(s.epsilon),
                             num(std::abs(s.epsilon))});
    }
  }
  return doc;
}

Document sweep_L_document(const RunConfig& rc) {
  if (!rc.V0) throw DomainError("sweep-L: --V0 is required");
  const WellSpec base{.V0 = *rc.V0, .L = 1.0, .hbar = rc.hbar, .mass = rc.mass};
  base.validate();
  Document doc;
  doc.config = base_config(rc);
  doc.config.push_back({"V0", num(base.V0)});
  doc.config.push_back({"hbar", num(base.hbar)});
  doc.config.push_back({"mass", num(base.mass)});
  doc.config.push_back({"L_min", num(rc.L_min)});
  doc.config.push_back({"L_max", num(rc.L_max)});
  doc.config.push_back({"steps", integer(rc.steps)});
  doc.config.push_back({"tol", num(rc.tol)});
  doc.columns = {"L", "index", "parity", "energy", "abs_energy", "epsilon"};
  for (const SweepRow& row : sweep_L(base, rc.L_min, rc.L_max, rc.steps, rc.tol)) {
    for (const BoundState& s : row.states) {
      doc.rows.push_back(Row{num(row.parameter), integer(s.index), text(to_string(s.parity)), num(s.energy),
                             num(std::abs(s.energy)), num(s.epsilon)});
    }
  }
  return doc;
}

Document wavefunction_document(const RunConfig& rc) {
  const WellSpec spec = resolve_well(rc);
  const BoundStateList list = find_bound_states(spec, rc.tol);
  if (rc.state < 0 || static_cast<std::size_t>(rc.state) >= list.states.size()) {
    std::ostringstream msg;
    msg << "wavefunction: --state " << rc.state << " out of range, the well has " << list.states.size()
        << " bound state(s)";
    throw DomainError(msg.str());
  }
  const BoundState& state = list.states[static_cast<std::size_t>(rc.state)];
  const double v0 = nondimensionalize(spec);
  const WaveCoefficients psi = normalize(match_coefficients(state, v0, spec.L), rc.quad_tol);

  Document doc;
  doc.config = base_config(rc);
  append_well(doc.config, rc, spec);
  doc.config.push_back({"quad_tol", num(rc.quad_tol)});
  doc.config.push_back({"state", integer(rc.state)});
  doc.config.push_back({"xmin", num(rc.x_min)});
  doc.config.push_back({"xmax", num(rc.x_max)});
  doc.config.push_back({"n", integer(static_cast<std::int64_t>(rc.n))});
  doc.columns = {"x", "psi"};
  for (const WaveSample& s : sample(psi, rc.x_min, rc.x_max, rc.n)) doc.rows.push_back(Row{num(s.x), num(s.psi)});
  doc.summary = {{"index", integer(state.index)},
                 {"parity", text(to_string(state.parity))},
                 {"epsilon", num(state.epsilon)},
                 {"energy", num(state.energy)}};
  return doc;
}

Document oracle_document(const RunConfig& rc, bool& passed) {
  const WellSpec spec = resolve_well(rc);
  const BoundStateList list = find_bound_states(spec, rc.tol);
  const OracleReport report = compare_spectra(spec, list.states, rc.eps_cut, rc.n_points);

  Document doc;
  doc.config = base_config(rc);
  append_well(doc.config, rc, spec);
  doc.config.push_back({"eps_cut", num(rc.eps_cut)});
  doc.config.push_back({"n_points", integer(static_cast<std::int64_t>(rc.n_points))});
  doc.columns = {"index",          "parity",         "epsilon_airy",   "epsilon_fd",      "epsilon_fine",
                 "epsilon_coarse", "abs_difference", "compared",       "within_tolerance"};
  for (const OracleRow& r : report.rows) {
    doc.rows.push_back(Row{integer(r.index), text(to_string(r.parity)), num(r.epsilon_airy), num(r.epsilon_fd),
                           num(r.epsilon_fine), num(r.epsilon_coarse), num(r.abs_difference), r.compared,
                           r.within_tolerance});
  }
  doc.summary = {{"half_width", num(report.half_width)},
                 {"n_fine", integer(static_cast<std::int64_t>(report.n_fine))},
                 {"n_coarse", integer(static_cast<std::int64_t>(report.n_coarse))},
                 {"airy_count", integer(static_cast<std::int64_t>(report.airy_count))},
                 {"fd_count", integer(static_cast<std::int64_t>(report.fd_count))},
                 {"counts_agree", report.counts_agree},
                 {"tolerance", num(kOracleTolerance)},
                 {"max_difference", num(report.max_difference)},
                 {"passed", report.passed}};
  passed = report.passed;
  return doc;
}

Document delta_document(const RunConfig& rc, bool& passed) {
  const DeltaLimitReport report = delta_limit_check(rc.lambda, rc.L_values, rc.hbar, rc.mass);
  Document doc;
  doc.config = base_config(rc);
  doc.config.push_back({"lambda", num(rc.lambda)});
  doc.config.push_back({"hbar", num(rc.hbar)});
  doc.config.push_back({"mass", num(rc.mass)});
  std::string Ls;
  for (std::size_t i = 0; i < rc.L_values.size(); ++i) Ls += (i ? ";" : "") + format_number(rc.L_values[i]);
  doc.config.push_back({"L_values", text(Ls)});
  doc.columns = {"L",          "v0",          "count",      "ground_parity", "epsilon",
                 "predicted_epsilon", "ratio_error", "energy", "energy_error", "psi_error"};
  for (const DeltaLimitRow& r : report.rows) {
    doc.rows.push_back(Row{num(r.L), num(r.v0), integer(static_cast<std::int64_t>(r.count)),
                           text(to_string(r.ground_parity)), num(r.epsilon), num(r.predicted_epsilon),
                           num(r.ratio_error), num(r.energy), num(r.energy_error), num(r.psi_error)});
  }
  doc.summary = {{"delta_energy", num(report.delta_energy)},
                 {"odd_threshold", report.odd_threshold ? num(*report.odd_threshold) : text("none")},
                 {"single_even_below_threshold", report.single_even_below_threshold},
                 {"single_state_at_two_smallest", report.single_state_at_two_smallest},
                 {"ratio_monotone", report.ratio_monotone},
                 {"energy_monotone", report.energy_monotone},
                 {"psi_monotone", report.psi_monotone},
                 {"epsilon_slope", num(report.epsilon_slope)},
                 {"passed", report.passed}};
  passed = report.passed;
  return doc;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::solve:
      return "solve";
    case Command::sweep_v0:
      return "sweep-v0";
    case Command::sweep_L:
      return "sweep-L";
    case Command::wavefunction:
      return "wavefunction";
    case Command::oracle_check:
      return "oracle-check";
    case Command::delta_limit:
      return "delta-limit";
  }
  return "unknown";
}

WellSpec resolve_well(const RunConfig& rc) {
  WellSpec spec{.V0 = 1.0, .L = rc.L.value_or(1.0), .hbar = rc.hbar, .mass = rc.mass};
  if (rc.v0) {
    if (!(*rc.v0 > 0.0) || !std::isfinite(*rc.v0)) throw DomainError("--v0 must be positive and finite");
    if (rc.V0 && !rc.L) {
      spec.V0 = *rc.V0;
      spec.L = std::sqrt(*rc.v0 * rc.hbar * rc.hbar / (2.0 * rc.mass * *rc.V0));
    } else {
      spec.V0 = *rc.v0 * rc.hbar * rc.hbar / (2.0 * rc.mass * spec.L * spec.L);
    }
    spec.validate();
    if (rc.V0 && rc.L) {
      const WellSpec given{.V0 = *rc.V0, .L = *rc.L, .hbar = rc.hbar, .mass = rc.mass};
      const double implied = nondimensionalize(given);
      if (std::abs(implied - *rc.v0) > 1e-12 * *rc.v0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "--v0 " << *rc.v0 << " is inconsistent with --V0 " << *rc.V0 << " --L " << *rc.L << " (implies v0 "
            << implied << ")";
        throw DomainError(msg.str());
      }
      spec = given;
    }
    return spec;
  }
  if (!rc.V0) throw DomainError("either --v0 or the pair --V0/--L is required");
  if (!rc.L) throw DomainError("--V0 given without --L");
  spec.V0 = *rc.V0;
  spec.validate();
  return spec;
}

Document build_document(const RunConfig& config, bool& check_passed) {
  check_passed = true;
  switch (config.command) {
    case Command::solve:
      return solve_document(config);
    case Command::sweep_v0:
      return sweep_v0_document(config);
    case Command::sweep_L:
      return sweep_L_document(config);
    case Command::wavefunction:
      return wavefunction_document(config);
    case Command::oracle_check:
      return oracle_document(config, check_passed);
    case Command::delta_limit:
      return delta_document(config, check_passed);
  }
  throw DomainError("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Document doc;
  bool passed = true;
  try {
    doc = build_document(config, passed);
  } catch (const DomainError& e) {
    err << "triwell: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const RangeError& e) {
    err << "triwell: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const MismatchError& e) {
    err << "triwell: check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const ConsistencyError& e) {
    err << "triwell: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const QuadratureError& e) {
    err << "triwell: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "triwell: invalid input: cannot open --output " << config.output << '\n';
      return kExitValidation;
    }
    sink = &file;
  }
  if (config.format == Format::csv) {
    write_csv(*sink, doc);
  } else {
    write_json(*sink, doc);
  }
  sink->flush();

  if (!passed) {
    err << "triwell: " << to_string(config.command) << " reported a failed check\n";
    return kExitCheckFailed;
  }
  return kExitSuccess;
}

}  // namespace triwell::cli
