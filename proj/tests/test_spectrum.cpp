#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "triwell/airy.hpp"
#include "triwell/errors.hpp"
#include "triwell/spectrum.hpp"

using namespace triwell;

namespace {

// Quantization determinant evaluated with Boost's Airy functions.
double boost_residual(double z0, double v0, Parity parity) {
  namespace bm = boost::math;
  const double c = std::cbrt(v0);
  const double eps = -v0 * (1.0 + z0 / c);
  const double alpha = -std::sqrt(-eps) / c;
  const double zL = z0 + c;
  const double a_edge = bm::airy_ai_prime(zL) - alpha * bm::airy_ai(zL);
  const double b_edge = bm::airy_bi_prime(zL) - alpha * bm::airy_bi(zL);
  const double a0 = parity == Parity::even ? bm::airy_ai_prime(z0) : bm::airy_ai(z0);
  const double b0 = parity == Parity::even ? bm::airy_bi_prime(z0) : bm::airy_bi(z0);
  return a_edge * b0 - b_edge * a0;
}

// Sign changes of the Boost residual on a fine uniform grid.
int boost_root_count(double v0) {
  const double c = std::cbrt(v0);
  const int n = 20000;
  int roots = 0;
  for (Parity parity : {Parity::even, Parity::odd}) {
    double prev = boost_residual(-c * (1.0 - 1e-7), v0, parity);
    for (int i = 1; i <= n; ++i) {
      const double z = -c * (1.0 - 1e-7) + c * (1.0 - 2e-7) * i / n;
      const double f = boost_residual(z, v0, parity);
      if ((prev < 0) != (f < 0)) ++roots;
      prev = f;
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("alpha") {
  // -sqrt(20)/20^{1/3} = -1.6475489724..., -sqrt(12.5029801)/20^{1/3} = -1.3026570815...
  CHECK(std::abs(alpha_of(-1e-12, 20.0) + 1.6475489724) <= 1e-9);
  CHECK(std::abs(alpha_of(z0_of_epsilon(-12.5029801, 20.0), 20.0) + 1.3026570816) <= 1e-9);
  CHECK(std::abs(alpha_of(-1.0175027, 20.0) + 1.302678) <= 1e-4);
  CHECK(std::abs(alpha_of(-std::cbrt(20.0) + 1e-12, 20.0)) <= 1e-5);
  CHECK(alpha_of(-1.0, 20.0) < 0.0);
  CHECK_THROWS_AS(alpha_of(0.0, 20.0), DomainError);
  CHECK_THROWS_AS(alpha_of(-std::cbrt(20.0), 20.0), DomainError);
  CHECK_THROWS_AS(alpha_of(0.5, 20.0), DomainError);
  CHECK_THROWS_AS(alpha_of(-0.5, 0.0), DomainError);
}

TEST_CASE("matching residual at the v0 = 20 roots") {
  // z0 of the two states from epsilon = -12.5029801 and -3.1015082.
  const double even_root = z0_of_epsilon(-12.5029801, 20.0);
  const double odd_root = z0_of_epsilon(-3.1015082, 20.0);
  const MatchingResidual even = matching_residual(even_root, 20.0, Parity::even);
  const MatchingResidual odd = matching_residual(odd_root, 20.0, Parity::odd);
  CHECK(std::abs(even.value) <= 1e-5 * even.scale);
  CHECK(std::abs(odd.value) <= 1e-5 * odd.scale);

  const MatchingResidual wrong = matching_residual(even_root, 20.0, Parity::odd);
  CHECK(std::abs(wrong.value) > 0.1 * wrong.scale);
  // Sign agrees with the independent evaluation.
  CHECK((wrong.value > 0) == (boost_residual(even_root, 20.0, Parity::odd) > 0));
}

TEST_CASE("the v0 = 20 spectrum") {
  const BoundStateList list = find_bound_states(WellSpec{.V0 = 10.0, .L = 1.0});
  REQUIRE(list.states.size() == 2);
  CHECK(std::abs(list.states[0].epsilon + 12.5029801) <= 1e-5);
  CHECK(std::abs(list.states[1].epsilon + 3.1015082) <= 1e-5);
  CHECK(list.states[0].parity == Parity::even);
  CHECK(list.states[1].parity == Parity::odd);
  CHECK(list.states[0].energy == doctest::Approx(0.5 * list.states[0].epsilon).epsilon(1e-15));
  // The determinant computed with Boost's Airy functions vanishes at the returned roots.
  for (const BoundState& s : list.states) {
    const double scale = std::abs(boost_residual(s.z0 + 1e-3, 20.0, s.parity));
    CHECK(std::abs(boost_residual(s.z0, 20.0, s.parity)) <= 1e-10 * scale);
  }
  CHECK(boost_root_count(20.0) == 2);
}

TEST_CASE("state counts") {
  CHECK(count_bound_states(spec_from_v0(1.0)) == 1);
  CHECK(find_bound_states(spec_from_v0(1.0)).states[0].parity == Parity::even);
  CHECK(count_bound_states(spec_from_v0(1e-4)) == 1);
  const std::size_t deep = count_bound_states(spec_from_v0(1000.0));
  CHECK(deep >= 3);
  CHECK(deep >= count_bound_states(spec_from_v0(20.0)));
  for (double v0 : {1.0, 5.0, 40.0, 100.0, 1000.0}) {
    INFO("v0 = " << v0);
    CHECK(count_bound_states(spec_from_v0(v0)) == static_cast<std::size_t>(boost_root_count(v0)));
  }
}

TEST_CASE("weak well approaches -v0^2/4") {
  const BoundStateList list = find_bound_states(spec_from_v0(1e-4));
  REQUIRE(list.states.size() == 1);
  CHECK(std::abs(list.states[0].epsilon / (1e-4 * 1e-4) + 0.25) <= 1e-3);
}

TEST_CASE("roots are tight and inside the window") {
  for (double v0 : {0.5, 1.0, 5.0, 20.0, 100.0, 1000.0}) {
    const BoundStateList list = find_bound_states(spec_from_v0(v0));
    for (const BoundState& s : list.states) {
      INFO("v0 = " << v0 << ", index " << s.index);
      const MatchingResidual r = matching_residual(s.z0, v0, s.parity);
      CHECK(std::abs(r.value) <= 1e3 * std::numeric_limits<double>::epsilon() * r.scale);
      CHECK(s.epsilon > -v0);
      CHECK(s.epsilon < 0.0);
      CHECK(s.z0 > -std::cbrt(v0));
      CHECK(s.z0 < 0.0);
      CHECK(s.parity == (s.index % 2 == 0 ? Parity::even : Parity::odd));
    }
    for (std::size_t i = 1; i < list.states.size(); ++i) CHECK(list.states[i].epsilon > list.states[i - 1].epsilon);
  }
}

TEST_CASE("at least one even state on a log grid down to 1e-6") {
  for (int k = -60; k <= 30; ++k) {
    const double v0 = std::pow(10.0, 0.1 * k);
    INFO("v0 = " << v0);
    const BoundStateList list = find_bound_states(spec_from_v0(v0));
    REQUIRE(!list.states.empty());
    CHECK(list.states[0].parity == Parity::even);
  }
}

TEST_CASE("count is non-decreasing in v0") {
  std::size_t previous = 0;
  for (double v0 = 0.25; v0 <= 400.0; v0 *= 1.05) {
    const std::size_t n = count_bound_states(spec_from_v0(v0));
    INFO("v0 = " << v0);
    CHECK(n >= previous);
    previous = n;
  }
}

TEST_CASE("determinant and ratio forms agree away from poles") {
  std::mt19937_64 rng(23);
  int compared = 0;
  for (double v0 : {2.0, 20.0, 150.0}) {
    const double c = std::cbrt(v0);
    std::uniform_real_distribution<double> dist(-c * 0.999, -c * 0.001);
    for (int i = 0; i < 400; ++i) {
      const double z0 = dist(rng);
      for (Parity parity : {Parity::even, Parity::odd}) {
        const AiryQuad origin = airy_eval(z0);
        const AiryQuad edge = airy_eval(z0 + c);
        const double alpha = alpha_of(z0, v0);
        const double b_edge = edge.bi_prime - alpha * edge.bi;
        const double b_origin = parity == Parity::even ? origin.bi_prime : origin.bi;
        if (std::abs(b_origin) < 0.05 || std::abs(b_edge) < 0.05) continue;
        const double from_det = matching_residual(z0, v0, parity).value / (b_edge * b_origin);
        const double ratio = matching_ratio_difference(z0, v0, parity);
        CHECK(std::abs(from_det - ratio) <= 1e-10 * std::max(1.0, std::abs(ratio)));
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("sweeps") {
  SUBCASE("v0 grid") {
    const auto rows = sweep_v0(2.0, 38.0, 19);
    REQUIRE(rows.size() == 19);
    CHECK(rows.back().parameter == 38.0);
    const auto& at20 = rows[9];
    CHECK(at20.parameter == 20.0);
    REQUIRE(at20.states.size() == 2);
    CHECK(std::abs(at20.states[0].epsilon + 12.5029801) <= 1e-5);
    CHECK(std::abs(at20.states[1].epsilon + 3.1015082) <= 1e-5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const BoundState& s : rows[i].states) {
        CHECK(-s.epsilon > 0.0);
        CHECK(-s.epsilon < rows[i].parameter);
        // A branch that exists at the previous v0 is shallower there.
        if (i > 0 && static_cast<std::size_t>(s.index) < rows[i - 1].states.size()) {
          CHECK(-s.epsilon > -rows[i - 1].states[s.index].epsilon);
        }
      }
    }
  }
  SUBCASE("L grid at V0 = 0.5") {
    const WellSpec base{.V0 = 0.5};
    const auto rows = sweep_L(base, 0.05, 20.0, 60);
    REQUIRE(rows.size() == 60);
    CHECK(rows.front().states.size() == 1);
    CHECK(rows.front().states[0].parity == Parity::even);
    CHECK(rows.back().states.size() >= rows.front().states.size());
    std::size_t previous = 0;
    for (const SweepRow& row : rows) {
      CHECK(row.states.size() >= previous);
      previous = row.states.size();
      for (const BoundState& s : row.states) {
        CHECK(std::abs(s.energy) > 0.0);
        CHECK(std::abs(s.energy) < base.V0);
      }
    }
  }
  CHECK_THROWS_AS(sweep_v0(0.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(sweep_v0(2.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(sweep_v0(1.0, 2.0, 1), DomainError);
  CHECK_THROWS_AS(sweep_L(WellSpec{}, 1.0, 0.5, 5), DomainError);
}

TEST_CASE("sweep errors name the failing parameter") {
  try {
    sweep_v0(1.0, 2e6, 2);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("v0=2000000") != std::string::npos);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(find_bound_states(spec_from_v0(20.0), 0.0), DomainError);
  CHECK_THROWS_AS(find_bound_states(spec_from_v0(20.0), 1e-5), DomainError);
  CHECK_NOTHROW(find_bound_states(spec_from_v0(20.0), 1e-6));
  CHECK_THROWS_AS(find_bound_states(WellSpec{.V0 = -1.0}), DomainError);
  CHECK_THROWS_AS(matching_residual(0.1, 20.0, Parity::even), DomainError);
  CHECK(scan_points(1.0) == 80);
  CHECK(scan_points(0.01) == 64);
  CHECK(scan_points(100.0) == 440);
}
