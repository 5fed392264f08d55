#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "rkstab/initial_conditions.hpp"
#include "rkstab/presets.hpp"
#include "rkstab/spatial.hpp"
#include "rkstab/stepper.hpp"

using namespace rkstab;

namespace {

RhsFunction linear(double lambda) {
  return [lambda](std::span<const double> q, std::span<double> out) {
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = lambda * q[i];
  };
}

double max_abs_diff(const State& a, const State& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const State& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void check_modified_representation(const ButcherTableau& t, const StageTrace& trace) {
  const double scale = std::max(1.0, max_abs(trace.q_n));
  for (int i = 1; i <= trace.stages(); ++i) {
    CAPTURE(i);
    CHECK(max_abs_diff(modified_representation_stage(t, trace, i),
                       trace.stage_solutions[static_cast<std::size_t>(i - 1)]) <= 1e-13 * scale);
  }
  CHECK(max_abs_diff(modified_representation_result(t, trace), trace.q_rk) <= 1e-13 * scale);
}

}  // namespace

TEST_CASE("single steps on linear problems") {
  const State one{1.0};
  CHECK(rk_step_instrumented(builtin_scheme("forward_euler"), linear(-1.0), one, 0.1).q_rk[0] ==
        doctest::Approx(0.9).epsilon(1e-15));
  CHECK(rk_step_instrumented(builtin_scheme("rk44"), linear(1.0), one, 1.0).q_rk[0] ==
        doctest::Approx(1.0 + 1.0 + 0.5 + 1.0 / 6.0 + 1.0 / 24.0).epsilon(1e-15));
  CHECK(rk_step_instrumented(builtin_scheme("midpoint"), linear(1.0), one, 1.0).q_rk[0] ==
        doctest::Approx(2.5).epsilon(1e-15));
  // Every three-stage third-order method agrees with the cubic Taylor polynomial.
  for (const auto* id : {"ssprk33", "rk31"}) {
    CHECK(rk_step_instrumented(builtin_scheme(id), linear(1.0), one, 1.0).q_rk[0] ==
          doctest::Approx(1.0 + 1.0 + 0.5 + 1.0 / 6.0).epsilon(1e-15));
  }
}

TEST_CASE("trace contents") {
  const auto t = builtin_scheme("rk44");
  const auto trace = rk_step_instrumented(t, linear(2.0), State{1.0, -1.0}, 0.25);
  REQUIRE(trace.stages() == 4);
  CHECK(trace.stage_solutions[0] == trace.q_n);
  for (int j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(trace.stage_derivatives[j][k] == doctest::Approx(2.0 * trace.stage_solutions[j][k]));
      CHECK(trace.shifted_states[j][k] ==
            doctest::Approx(trace.q_n[k] + 0.25 * trace.stage_derivatives[j][k]));
    }
  }
  CHECK_THROWS_AS(rk_step_instrumented(t, linear(1.0), State{1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("modified representation of the first stages") {
  const auto t = builtin_scheme("rk44");
  const auto trace = rk_step_instrumented(t, linear(-3.0), State{0.4, 2.0}, 0.1);
  CHECK(modified_representation_stage(t, trace, 1) == trace.q_n);
  const auto s2 = modified_representation_stage(t, trace, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(s2[k] == doctest::Approx(trace.q_n[k] + 0.05 * trace.stage_derivatives[0][k]));
  }
}

TEST_CASE("modified representation on random tableaux and linear systems") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> stages(1, 6);
  for (int k = 0; k < 200; ++k) {
    const int s = stages(rng);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s, s);
    for (int i = 1; i < s; ++i)
      for (int j = 0; j < i; ++j) a(i, j) = u(rng);
    Eigen::VectorXd b(s);
    for (int j = 0; j < s; ++j) b(j) = u(rng);
    b(s - 1) += 1.0 - b.sum();
    const auto t = make_tableau("random", a, b);

    const std::size_t n = 5;
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
    const RhsFunction rhs = [m](std::span<const double> q, std::span<double> out) {
      Eigen::Map<const Eigen::VectorXd> x(q.data(), static_cast<Eigen::Index>(q.size()));
      Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size())) = m * x;
    };
    State q(n);
    for (auto& v : q) v = u(rng);
    CAPTURE(k);
    check_modified_representation(t, rk_step_instrumented(t, rhs, q, 0.3 * (1.0 + u(rng))));
  }
}

TEST_CASE("modified representation on every experiment") {
  for (const auto& experiment : experiment_ids()) {
    for (const auto& id : builtin_scheme_ids()) {
      const auto t = builtin_scheme(id);
      const auto config = experiment_preset(experiment, t);
      const Discretization d(config.scheme, config.grid);
      const RhsFunction rhs = [&d](std::span<const double> q, std::span<double> out) {
        d.rhs(q, out);
      };
      auto q = initial_state(config.ic, config.grid, config.scheme);
      for (int step = 0; step < 5; ++step) {
        StageTrace trace;
        try {
          trace = rk_step_instrumented(t, rhs, q, d.dt_fe(q));
        } catch (const std::runtime_error&) {
          break;  // inadmissible Euler state; nothing left to compare
        }
        CAPTURE(experiment);
        CAPTURE(id);
        check_modified_representation(t, trace);
        q = trace.q_rk;
      }
    }
  }
}

TEST_CASE("observed convergence orders on q' = q") {
  const std::map<std::string, double> expected = {
      {"forward_euler", 1.0}, {"midpoint", 2.0}, {"ssprk33", 3.0}, {"rk31", 3.0}, {"rk44", 4.0}};
  for (const auto& [id, order] : expected) {
    const auto t = builtin_scheme(id);
    auto error = [&](int steps) {
      State q{1.0};
      for (int k = 0; k < steps; ++k) q = rk_step_instrumented(t, linear(1.0), q, 1.0 / steps).q_rk;
      return std::abs(q[0] - std::exp(1.0));
    };
    const double observed = std::log2(error(32) / error(64));
    CAPTURE(id);
    CHECK(std::abs(observed - order) <= 0.1);
  }
}

TEST_CASE("right-hand side failures carry the stage") {
  int calls = 0;
  const RhsFunction flaky = [&calls](std::span<const double> q, std::span<double> out) {
    if (++calls == 3) throw NonPhysicalState("negative density", 4);
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i];
  };
  try {
    rk_step_instrumented(builtin_scheme("rk44"), flaky, State{1.0}, 0.1);
    FAIL("expected StepFailed");
  } catch (const StepFailed& e) {
    CHECK(e.stage() == 3);
    CHECK(std::string(e.what()).find("negative density") != std::string::npos);
  }
}
