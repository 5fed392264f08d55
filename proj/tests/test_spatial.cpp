#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "rkstab/initial_conditions.hpp"
#include "oracles.hpp"
#include "rkstab/spatial.hpp"

using namespace rkstab;

namespace {

Grid1D periodic_unit(std::size_t n, double dx = 1.0) {
  return Grid1D(n, 0.0, dx * static_cast<double>(n), Periodic{}, Sampling::nodes);
}

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

}  // namespace

TEST_CASE("dissipative Burgers") {
  const ScalarField constant(periodic_unit(5), std::vector<double>(5, 0.7));
  check_close(rhs_dissipative_burgers(constant, 1e-3).q, std::vector<double>(5, 0.0), 1e-15);

  const ScalarField bump(periodic_unit(3), {0.0, 1.0, 0.0});
  const double mu = 1e-3;
  check_close(rhs_dissipative_burgers(bump, mu).q,
              {-(1.0 / 6.0 - mu), -2.0 * mu, 1.0 / 6.0 + mu}, 1e-15);
  check_close(rhs_dissipative_burgers(bump, mu).q, {-0.1656667, -0.002, 0.1676667}, 1e-7);

  const ScalarField open(Grid1D(3, 0.0, 1.0, Dirichlet{}), {0.0, 1.0, 0.0});
  CHECK_THROWS_AS(rhs_dissipative_burgers(open, mu), UnsupportedBoundary);
}

TEST_CASE("upwind Burgers") {
  const ScalarField constant(periodic_unit(4), std::vector<double>(4, 0.3));
  check_close(rhs_upwind_burgers(constant).q, std::vector<double>(4, 0.0), 1e-15);
  check_close(rhs_upwind_burgers(ScalarField(periodic_unit(3), {0.5, 1.0, 0.5})).q,
              {0.0, -0.375, 0.375}, 1e-15);
  check_close(rhs_upwind_burgers(ScalarField(periodic_unit(2 + 1, 0.5), {0.0, 1.0, 1.0})).q,
              {1.0, -1.0, 0.0}, 1e-15);
  CHECK_THROWS_AS(rhs_upwind_burgers(ScalarField(Grid1D(3, 0.0, 1.0, Outflow{}), {1, 1, 1})),
                  UnsupportedBoundary);
}

TEST_CASE("upwind Burgers two-cell example") {
  // Two cells are below the grid minimum; the same data repeated is the
  // same periodic field.
  const ScalarField f(periodic_unit(4, 0.5), {0.0, 1.0, 0.0, 1.0});
  check_close(rhs_upwind_burgers(f).q, {1.0, -1.0, 1.0, -1.0}, 1e-15);
}

TEST_CASE("minmod and Godunov flux") {
  CHECK(minmod(1.0, 2.0) == 1.0);
  CHECK(minmod(-1.0, 2.0) == 0.0);
  CHECK(minmod(-3.0, -2.0) == -2.0);
  CHECK(minmod(0.0, 2.0) == 0.0);

  CHECK(godunov_flux_burgers(1.0, 2.0) == 0.5);
  CHECK(godunov_flux_burgers(-1.0, 1.0) == 0.0);
  CHECK(godunov_flux_burgers(1.0, -0.5) == 0.5);
  CHECK(godunov_flux_burgers(-2.0, -1.0) == 0.5);
  CHECK(godunov_flux_burgers(0.3, 0.3) == doctest::Approx(0.045));
}

TEST_CASE("MUSCL Burgers") {
  const ScalarField constant(periodic_unit(6), std::vector<double>(6, -0.4));
  check_close(rhs_muscl_burgers(constant).q, std::vector<double>(6, 0.0), 1e-15);

  // Step from 1 to -0.5 with matching boundary states: only the cell right
  // of the step changes, receiving flux 0.5 from the left and losing 0.125.
  const ScalarField step(Grid1D(4, 0.0, 4.0, Dirichlet{1.0, -0.5}, Sampling::nodes),
                         {1.0, 1.0, -0.5, -0.5});
  check_close(rhs_muscl_burgers(step).q, {0.0, 0.0, 0.375, 0.0}, 1e-15);

  const ScalarField linear(periodic_unit(4), {0.0, 1.0, 2.0, 3.0});
  check_close(rhs_muscl_burgers(linear).q, oracle::muscl_rhs(linear.q, 1.0, true, 0, 0), 1e-14);

  CHECK_THROWS_AS(Discretization(MusclBurgers{}, Grid1D(4, 0.0, 1.0, Outflow{})),
                  UnsupportedBoundary);
}

TEST_CASE("MUSCL matches the reference transcription on random fields") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<int> len(3, 40);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(len(rng));
    std::vector<double> q(n);
    for (auto& v : q) v = u(rng);
    const double dx = 0.1 + std::abs(u(rng));
    const bool periodic = k % 2 == 0;
    const double l = u(rng), r = u(rng);
    const Boundary b = periodic ? Boundary{Periodic{}} : Boundary{Dirichlet{l, r}};
    const ScalarField f(Grid1D(n, 0.0, dx * static_cast<double>(n), b, Sampling::nodes), q);
    CAPTURE(k);
    check_close(rhs_muscl_burgers(f).q, oracle::muscl_rhs(q, dx, periodic, l, r), 1e-14);
  }
}

TEST_CASE("periodic schemes conserve the total") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(0.05, 2.0), any(-2.0, 2.0);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> p(31), a(31);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = pos(rng);
      a[i] = any(rng);
    }
    const Grid1D g(31, 0.0, 1.0, Periodic{}, Sampling::nodes);
    auto sum = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); };
    CHECK(std::abs(sum(rhs_dissipative_burgers(ScalarField(g, a), 1e-3).q)) <= 1e-12);
    CHECK(std::abs(sum(rhs_upwind_burgers(ScalarField(g, p)).q)) <= 1e-12);
    CHECK(std::abs(sum(rhs_muscl_burgers(ScalarField(g, a)).q)) <= 1e-12);
  }
}

TEST_CASE("local extrema move toward their neighbours") {
  // At a local maximum the right-hand side is non-positive and at a local
  // minimum non-negative, which is what makes forward Euler TVD.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(0.05, 1.0), any(-1.0, 1.0);
  int maxima = 0, minima = 0;
  for (int k = 0; k < 1000; ++k) {
    const Grid1D g(12, 0.0, 1.0, Periodic{}, Sampling::nodes);
    std::vector<double> p(12), a(12);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = pos(rng);
      a[i] = any(rng);
    }
    for (const auto& [q, r] : {std::pair{p, rhs_upwind_burgers(ScalarField(g, p)).q},
                               std::pair{a, rhs_muscl_burgers(ScalarField(g, a)).q}}) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        const double l = q[(i + q.size() - 1) % q.size()];
        const double rr = q[(i + 1) % q.size()];
        if (q[i] >= l && q[i] >= rr) {
          ++maxima;
          CHECK(r[i] <= 0.0);
        }
        if (q[i] <= l && q[i] <= rr) {
          ++minima;
          CHECK(r[i] >= 0.0);
        }
      }
    }
  }
  CHECK(maxima > 1000);
  CHECK(minima > 1000);
}

TEST_CASE("Lax-Friedrichs flux") {
  const double gamma = 5.0 / 3.0;
  const auto left = primitive_to_conserved({1.0, 0.0, (gamma - 1.0) * 0.1}, gamma);
  const auto right = primitive_to_conserved({1e-3, 0.0, (gamma - 1.0) * 1e-10}, gamma);
  const auto h = lax_friedrichs_flux_euler(left, right, gamma);
  CHECK(h.wavespeed == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const Conserved state{1.3, 0.4, 2.0};
  const auto same = lax_friedrichs_flux_euler(state, state, 1.4);
  const auto f = euler_flux(state, 1.4);
  for (int c = 0; c < 3; ++c) CHECK(same.flux[c] == doctest::Approx(f[c]));

  const auto rest = primitive_to_conserved({2.0, 0.0, 0.7}, 1.4);
  const auto h0 = lax_friedrichs_flux_euler(rest, rest, 1.4);
  CHECK(h0.flux[0] == 0.0);
  CHECK(h0.flux[1] == doctest::Approx(0.7));
  CHECK(h0.flux[2] == 0.0);

  try {
    lax_friedrichs_flux_euler(state, {-1.0, 0.0, 1.0}, 1.4);
    FAIL("expected NonPhysicalState");
  } catch (const NonPhysicalState& e) {
    CHECK(std::string(e.what()).find("right") != std::string::npos);
  }
  CHECK_THROWS_AS(lax_friedrichs_flux_euler({1.0, 2.0, 1.0}, state, 1.4), NonPhysicalState);
}

TEST_CASE("Lax-Friedrichs Euler right-hand side") {
  const Grid1D g(10, 0.0, 1.0, Outflow{});
  const EulerField rest(g, std::vector<double>(10, 1.0), std::vector<double>(10, 0.0),
                        std::vector<double>(10, 2.5), 1.4);
  const auto r = rhs_llf_euler(rest);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(r.rho[i] == 0.0);
    CHECK(r.m[i] == 0.0);
    CHECK(r.E[i] == 0.0);
  }

  const double gamma = 5.0 / 3.0;
  const Grid1D lg(60, 0.0, 1.0, Outflow{});
  const LlfEuler scheme{gamma, LaxFriedrichsVariant::local};
  const ShockTube tube{0.33, {1.0, 0.0, (gamma - 1.0) * 0.1}, {1e-3, 0.0, (gamma - 1.0) * 1e-10}};
  const auto q0 = initial_state(tube, lg, scheme);
  const auto f = unflatten(q0, lg, gamma);
  std::size_t jump = 0;
  while (f.rho[jump + 1] == f.rho[jump]) ++jump;
  for (auto variant : {LaxFriedrichsVariant::local, LaxFriedrichsVariant::global}) {
    const auto rr = rhs_llf_euler(f, variant);
    for (std::size_t i = 0; i < 60; ++i) {
      if (i + 1 < jump || i > jump + 2) {
        CAPTURE(i);
        CHECK(rr.rho[i] == 0.0);
        CHECK(rr.m[i] == 0.0);
        CHECK(rr.E[i] == 0.0);
      }
    }
    CHECK(rr.a_max == doctest::Approx(1.0 / 3.0));
  }

  auto bad = f;
  bad.rho[5] = 0.0;
  try {
    rhs_llf_euler(bad);
    FAIL("expected NonPhysicalState");
  } catch (const NonPhysicalState& e) {
    CHECK(e.cell() == 5);
  }
  CHECK_THROWS_AS(Discretization(scheme, Grid1D(5, 0.0, 1.0, Dirichlet{})), UnsupportedBoundary);
}

TEST_CASE("forward Euler step bounds") {
  const Grid1D diss(200, -1.0, 1.0, Periodic{}, Sampling::nodes);
  CHECK(dt_fe(DissipativeBurgers{}, ScalarField(diss, std::vector<double>(200, 0.1))) ==
        doctest::Approx(6e-5));

  const Grid1D step(80, -10.0, 70.0, Dirichlet{1.0, -0.5}, Sampling::nodes);
  const auto q = initial_state(ScalarStep{}, step, MusclBurgers{});
  CHECK(dt_fe(MusclBurgers{}, ScalarField(step, q)) == doctest::Approx(0.5));
  CHECK(std::isinf(dt_fe(MusclBurgers{}, ScalarField(step, std::vector<double>(80, 0.0)))));

  const Grid1D up(100, 0.0, 2.0, Periodic{}, Sampling::nodes);
  CHECK(dt_fe(UpwindBurgers{}, ScalarField(up, std::vector<double>(100, 0.5))) ==
        doctest::Approx(0.02));

  const double gamma = 5.0 / 3.0;
  const Grid1D lg(600, 0.0, 1.0, Outflow{});
  const ShockTube tube{0.33, {1.0, 0.0, (gamma - 1.0) * 0.1}, {1e-3, 0.0, (gamma - 1.0) * 1e-10}};
  const auto e = unflatten(initial_state(tube, lg, LlfEuler{}), lg, gamma);
  CHECK(dt_fe(LlfEuler{}, e) == doctest::Approx(0.005).epsilon(1e-9));

  const EulerField still(Grid1D(4, 0.0, 1.0, Outflow{}), {1, 1, 1, 1}, {0, 0, 0, 0},
                         {0, 0, 0, 0}, gamma);
  CHECK(std::isinf(dt_fe(LlfEuler{}, still)));
}

TEST_CASE("discretization wraps the field-level kernels") {
  const Grid1D g(16, -1.0, 1.0, Periodic{}, Sampling::nodes);
  const auto q = initial_state(GaussianPulse{}, g, DissipativeBurgers{});
  const Discretization d(DissipativeBurgers{}, g);
  CHECK(d.state_size() == 16);
  check_close(d.rhs(q), rhs_dissipative_burgers(ScalarField(g, q), 1e-3).q, 0.0);
  std::vector<double> wrong(3);
  CHECK_THROWS_AS(d.rhs(q, wrong), std::invalid_argument);
}
