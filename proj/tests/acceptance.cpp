// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support/airy_oracle.hpp"
#include "triwell/airy.hpp"
#include "triwell/limits.hpp"
#include "triwell/oracle.hpp"
#include "triwell/spectrum.hpp"
#include "triwell/wavefunction.hpp"

using namespace triwell;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "PASS " : "FAIL ") << name << ":" << o.detail.str() << std::endl;
}

std::string run_cli(const std::string& args, int& code) {
  const std::string command = std::string(TRIWELL_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + command);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  std::cout.precision(6);

  criterion("eigenvalues at v0 = 20", [](Outcome& o) {
    const auto start = Clock::now();
    const BoundStateList list = find_bound_states(WellSpec{.V0 = 10.0, .L = 1.0, .hbar = 1.0, .mass = 1.0});
    const double elapsed = seconds_since(start);
    o.require(list.states.size() >= 2, "at least two states");
    const double d0 = std::abs(list.states.at(0).epsilon + 12.5029801);
    const double d1 = std::abs(list.states.at(1).epsilon + 3.1015082);
    o.detail << " eps0=" << list.states[0].epsilon << " (|d|=" << d0 << ")"
             << " eps1=" << list.states[1].epsilon << " (|d|=" << d1 << ")"
             << " time=" << elapsed << "s";
    o.require(d0 <= 1e-5, "|d eps0| <= 1e-5");
    o.require(d1 <= 1e-5, "|d eps1| <= 1e-5");
    o.require(list.states[0].parity == Parity::even && list.states[1].parity == Parity::odd, "parities");
    o.require(elapsed < 1.0, "runtime < 1 s");
  });

  criterion("bound-state window", [](Outcome& o) {
    std::size_t checked = 0;
    for (double v0 : {0.01, 0.1, 1.0, 10.0, 20.0, 100.0, 1000.0}) {
      for (const BoundState& s : find_bound_states(spec_from_v0(v0)).states) {
        ++checked;
        if (!(s.epsilon > -v0 && s.epsilon < 0.0)) {
          std::ostringstream what;
          what << "v0=" << v0 << " index " << s.index << " eps=" << s.epsilon;
          o.require(false, what.str());
        }
      }
    }
    o.detail << " " << checked << " states over 7 depths";
  });

  criterion("existence and parity", [](Outcome& o) {
    int depths = 0;
    for (int k = -60; k <= 30; ++k) {
      const double v0 = std::pow(10.0, 0.1 * k);
      const BoundStateList list = find_bound_states(spec_from_v0(v0));
      ++depths;
      std::ostringstream at;
      at << "v0=" << v0;
      o.require(!list.states.empty(), at.str() + " has a state");
      if (list.states.empty()) continue;
      o.require(list.states[0].parity == Parity::even, at.str() + " ground state even");
      for (const BoundState& s : list.states) {
        o.require(s.parity == (s.index % 2 == 0 ? Parity::even : Parity::odd), at.str() + " alternation");
      }
    }
    o.detail << " " << depths << " depths from 1e-6 to 1e3";
  });

  criterion("monotone counts", [](Outcome& o) {
    std::size_t previous = 0, last_v0 = 0, last_L = 0;
    for (double v0 = 1e-3; v0 <= 1000.0; v0 *= 1.05) {
      const std::size_t n = count_bound_states(spec_from_v0(v0));
      o.require(n >= previous, "non-decreasing in v0");
      previous = n;
    }
    last_v0 = previous;
    previous = 0;
    for (const SweepRow& row : sweep_L(WellSpec{.V0 = 0.5}, 0.05, 40.0, 400)) {
      o.require(row.states.size() >= previous, "non-decreasing in L");
      previous = row.states.size();
    }
    last_L = previous;
    o.detail << " count(v0=1000)=" << last_v0 << " count(V0=0.5, L=40)=" << last_L;
  });

  criterion("oracle equivalence", [](Outcome& o) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (double v0 : {5.0, 20.0, 100.0}) {
      const WellSpec spec = spec_from_v0(v0);
      const OracleReport report = compare_spectra(spec, find_bound_states(spec).states, 0.5, 16001);
      worst = std::max(worst, report.max_difference);
      std::ostringstream at;
      at << "v0=" << v0;
      o.require(report.passed, at.str() + " within 1e-3");
    }
    const double elapsed = seconds_since(start);
    o.detail << " max|d eps|=" << worst << " time=" << elapsed << "s";
    o.require(elapsed < 30.0, "runtime < 30 s");
  });

  criterion("delta limit", [](Outcome& o) {
    const std::vector<double> L = {1e-1, 1e-2, 1e-3, 1e-4};
    const DeltaLimitReport r = delta_limit_check(1.0, L);
    o.detail << " ratio errors";
    for (const DeltaLimitRow& row : r.rows) o.detail << " " << row.ratio_error;
    o.detail << " slope=" << r.epsilon_slope;
    o.require(r.single_state_at_two_smallest, "one state at the two smallest L");
    o.require(r.ratio_monotone, "ratio error decreasing");
    o.require(r.rows.back().ratio_error < 1e-2, "ratio error < 1e-2 at L = 1e-4");
    o.require(std::abs(r.epsilon_slope - 2.0) <= 0.05, "slope 2 +- 0.05");
  });

  criterion("Airy quality", [](Outcome& o) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> wide(-15.0, 15.0);
    double wronskian = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const AiryQuad q = airy_eval(wide(rng));
      wronskian = std::max(wronskian, std::abs(M_PI * (q.ai * q.bi_prime - q.ai_prime * q.bi) - 1.0));
    }
    // Relative error; for z < 0 against the oscillation envelope.
    double series = 0.0;
    std::uniform_real_distribution<double> narrow(-4.0, 4.0);
    for (int i = 0; i < 2000; ++i) {
      const double z = i < 801 ? -4.0 + 0.01 * i : narrow(rng);
      const AiryQuad q = airy_eval(z);
      const auto ref = testing::series_oracle(z, 200);
      const double ai = static_cast<double>(ref.ai), bi = static_cast<double>(ref.bi);
      const double aip = static_cast<double>(ref.ai_prime), bip = static_cast<double>(ref.bi_prime);
      const double m = std::hypot(ai, bi), n = std::hypot(aip, bip);
      const auto rel = [&](double got, double want, double envelope) {
        return std::abs(got - want) / (z < 0.0 ? envelope : std::abs(want));
      };
      series = std::max({series, rel(q.ai, ai, m), rel(q.bi, bi, m), rel(q.ai_prime, aip, n),
                         rel(q.bi_prime, bip, n)});
    }
    o.detail << " max Wronskian defect=" << wronskian << " max series error=" << series;
    o.require(wronskian <= 1e-12, "Wronskian <= 1e-12");
    o.require(series <= 1e-11, "series agreement <= 1e-11");
  });

  criterion("eigenfunction integrity at v0 = 20", [](Outcome& o) {
    const double v0 = 20.0;
    std::vector<WaveCoefficients> states;
    for (const BoundState& s : find_bound_states(spec_from_v0(v0)).states) {
      states.push_back(normalize(match_coefficients(s, v0)));
    }
    double norm_error = 0.0, jump = 0.0, overlap_max = 0.0;
    bool nodes_ok = true;
    for (const WaveCoefficients& w : states) {
      norm_error = std::max(norm_error, std::abs(norm_squared(w) - 1.0));
      double peak = 0.0;
      for (const WaveSample& s : sample(w, -2.0, 2.0, 4001)) peak = std::max(peak, std::abs(s.psi));
      const double h = 1e-6;
      for (double x : {-1.0, 0.0, 1.0}) {
        const double value_jump =
            std::abs(evaluate(w, std::nextafter(x, -INFINITY)) - evaluate(w, std::nextafter(x, INFINITY)));
        const double right = (-3.0 * evaluate(w, x) + 4.0 * evaluate(w, x + h) - evaluate(w, x + 2 * h)) / (2 * h);
        const double left = (3.0 * evaluate(w, x) - 4.0 * evaluate(w, x - h) + evaluate(w, x - 2 * h)) / (2 * h);
        jump = std::max({jump, value_jump / peak, std::abs(right - left) / peak});
      }
      nodes_ok = nodes_ok && count_nodes(w, -6.0, 6.0, 10000) == w.state.index;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        overlap_max = std::max(overlap_max, std::abs(overlap(states[i], states[j])));
      }
    }
    o.detail << " states=" << states.size() << " max|norm-1|=" << norm_error << " max jump=" << jump
             << " max overlap=" << overlap_max;
    o.require(norm_error <= 1e-8, "normalisation");
    o.require(jump <= 1e-8, "continuity");
    o.require(nodes_ok, "node counts");
    o.require(overlap_max <= 1e-6, "orthogonality");
  });

  criterion("determinism", [](Outcome& o) {
    int code_a = -1, code_b = -1;
    const std::string a = run_cli("solve --V0 10 --L 1 --format csv", code_a);
    const std::string b = run_cli("solve --V0 10 --L 1 --format csv", code_b);
    o.detail << " " << a.size() << " bytes";
    o.require(code_a == 0 && code_b == 0, "exit status 0");
    o.require(!a.empty() && a == b, "byte-identical output");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
