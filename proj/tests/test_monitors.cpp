#include <doctest.h>

#include <cmath>

#include "rkstab/monitors.hpp"
#include "rkstab/spatial.hpp"

using namespace rkstab;

namespace {

RhsFunction constant_rhs(std::vector<double> r) {
  return [r](std::span<const double>, std::span<double> out) {
    std::copy(r.begin(), r.end(), out.begin());
  };
}

Monitor monitor(MonitorKind kind, double tolerance = 1e-12) {
  Monitor m;
  m.kind = kind;
  m.tolerance = tolerance;
  return m;
}

}  // namespace

TEST_CASE("monitor names round trip") {
  for (auto k : {MonitorKind::energy, MonitorKind::tv, MonitorKind::positivity}) {
    CHECK(monitor_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(monitor_kind_from_string("entropy"), std::invalid_argument);
}

TEST_CASE("functionals and calibration") {
  auto e = monitor(MonitorKind::energy);
  const std::vector<double> q{3.0, -4.0};
  CHECK(e.functional(q) == 12.5);
  e.calibrate(q);
  CHECK(e.scale == 12.5);
  CHECK(e.slack() == doctest::Approx(12.5e-12));
  e.calibrate(std::vector<double>{0.1});
  CHECK(e.scale == 1.0);

  auto tv = monitor(MonitorKind::tv);
  CHECK(tv.functional(std::vector<double>{0.0, 1.0, 2.0}) == 4.0);
  tv.tv_wrap = false;
  CHECK(tv.functional(std::vector<double>{0.0, 1.0, 2.0}) == 2.0);

  auto p = monitor(MonitorKind::positivity);
  p.n_cells = 2;
  CHECK(p.functional(std::vector<double>{1.0, 2.0, 0.0, 0.0, 0.5, 3.0}) == 0.5);
}

TEST_CASE("forward Euler verdicts") {
  const auto trace = rk_step_instrumented(builtin_scheme("forward_euler"),
                                          constant_rhs({-1.0, 0.5}), State{1.0, 1.0}, 0.1);
  const auto m = monitor(MonitorKind::energy);
  const auto step = check_step_criterion(m, trace);
  REQUIRE(step.size() == 2);
  CHECK(step[0].where == Location::stage);
  CHECK(step[0].index == 1);
  CHECK(step[0].delta == 0.0);
  CHECK(step[1].where == Location::step);
  const double expected = 0.5 * (0.9 * 0.9 + 1.05 * 1.05) - 1.0;
  CHECK(step[1].delta == doctest::Approx(expected));

  const auto shifted = check_shifted_criterion(m, trace);
  REQUIRE(shifted.size() == 1);
  CHECK(shifted[0].delta == step[1].delta);
  CHECK(shifted[0].pass == step[1].pass);
}

TEST_CASE("tolerance zero makes the comparison exact") {
  const auto trace = rk_step_instrumented(builtin_scheme("rk44"), constant_rhs({0.0, 0.0, 0.0}),
                                          State{1.0, 2.0, 3.0}, 0.1);
  for (auto kind : {MonitorKind::energy, MonitorKind::tv}) {
    for (double tol : {0.0, 1e-12}) {
      const auto m = monitor(kind, tol);
      CHECK(all_pass(check_step_criterion(m, trace)));
      CHECK(all_pass(check_shifted_criterion(m, trace)));
      for (const auto& v : check_step_criterion(m, trace)) CHECK(v.delta == 0.0);
    }
  }
  const auto grow = rk_step_instrumented(builtin_scheme("forward_euler"),
                                         constant_rhs({1e-14, 0.0, 0.0}), State{1.0, 2.0, 3.0}, 1.0);
  CHECK_FALSE(all_pass(check_step_criterion(monitor(MonitorKind::energy, 0.0), grow)));
  CHECK(all_pass(check_step_criterion(monitor(MonitorKind::energy, 1e-12), grow)));
}

TEST_CASE("TV verdicts are translation invariant") {
  const std::vector<double> r{0.3, -0.2, 0.5, -0.6};
  const State q{0.1, 0.7, -0.4, 0.2};
  State shifted = q;
  for (auto& v : shifted) v += 5.0;
  const auto t = builtin_scheme("midpoint");
  const auto a = check_step_criterion(monitor(MonitorKind::tv), rk_step_instrumented(t, constant_rhs(r), q, 0.4));
  const auto b =
      check_step_criterion(monitor(MonitorKind::tv), rk_step_instrumented(t, constant_rhs(r), shifted, 0.4));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].delta == doctest::Approx(b[i].delta));
    CHECK(a[i].pass == b[i].pass);
  }
}

TEST_CASE("positivity of a trace") {
  // Quiescent gas: every candidate equals the initial state.
  const std::size_t n = 3;
  const State gas{1.0, 2.0, 0.5, 0.0, 0.0, 0.0, 1.0, 4.0, 2.0};
  const auto quiet =
      rk_step_instrumented(builtin_scheme("rk44"), constant_rhs(State(9, 0.0)), gas, 0.1);
  const auto verdicts = positivity_of_trace(quiet, n);
  CHECK(verdicts.size() == 4 + 1 + 4);
  for (const auto& v : verdicts) {
    CHECK(v.pass);
    CHECK(v.delta == 0.5);
  }

  StageTrace trace = quiet;
  trace.stage_solutions[2][1] = -1e-16;
  const auto step = positivity_of_trace(trace, n);
  CHECK(step[0].pass);
  CHECK(step[1].pass);
  CHECK_FALSE(step[2].pass);
  CHECK(step[2].where == Location::stage);
  CHECK(step[2].index == 3);
  CHECK(step[2].delta < 0.0);
}
