#include "rkstab/presets.hpp"

#include <stdexcept>

namespace rkstab {

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"dissipative", "upwind", "muscl2", "leblanc_n2",
                                               "leblanc_n5"};
  return ids;
}

namespace {

SimulationConfig dissipative(const ButcherTableau& t, const PresetOverrides& o) {
  const std::size_t n = o.n_cells.value_or(kDissipativeCells);
  return SimulationConfig{
      .scheme = DissipativeBurgers{.mu = 1e-3, .dt_fe_ratio = 0.006},
      .tableau = t,
      .grid = Grid1D(n, -1.0, 1.0, Periodic{}, Sampling::nodes),
      .ic = GaussianPulse{30.0},
      .t_final = kDissipativeFinalTime,
      .monitor = MonitorKind::energy,
  };
}

SimulationConfig upwind(const ButcherTableau& t, const PresetOverrides& o) {
  // dx = 0.02 on [0, 2]
  const std::size_t n = o.n_cells.value_or(100);
  return SimulationConfig{
      .scheme = UpwindBurgers{},
      .tableau = t,
      .grid = Grid1D(n, 0.0, 2.0, Periodic{}, Sampling::nodes),
      .ic = SineWave{0.5, 0.25},
      .t_final = 3.0,
      .monitor = MonitorKind::tv,
  };
}

SimulationConfig muscl2(const ButcherTableau& t, const PresetOverrides& o) {
  // dx = 1 on [-10, 70]
  const std::size_t n = o.n_cells.value_or(80);
  return SimulationConfig{
      .scheme = MusclBurgers{},
      .tableau = t,
      .grid = Grid1D(n, -10.0, 70.0, Dirichlet{1.0, -0.5}, Sampling::nodes),
      .ic = ScalarStep{0.0, 1.0, -0.5},
      .t_final = 200.0,
      .monitor = MonitorKind::tv,
  };
}

SimulationConfig leblanc(const ButcherTableau& t, const PresetOverrides& o) {
  constexpr double gamma = 5.0 / 3.0;
  const std::size_t n = o.n_cells.value_or(600);
  return SimulationConfig{
      .scheme = LlfEuler{gamma, o.lf_variant.value_or(LaxFriedrichsVariant::local)},
      .tableau = t,
      .grid = Grid1D(n, 0.0, 1.0, Outflow{}, Sampling::cell_centers),
      .ic = ShockTube{0.33, {1.0, 0.0, (gamma - 1.0) * 0.1}, {1e-3, 0.0, (gamma - 1.0) * 1e-10}},
      .t_final = 2.0 / 3.0,
      .monitor = MonitorKind::positivity,
  };
}

}  // namespace

SimulationConfig experiment_preset(std::string_view id, const ButcherTableau& tableau,
                                   double dt_factor, const PresetOverrides& overrides) {
  SimulationConfig config = [&] {
    if (id == "dissipative") return dissipative(tableau, overrides);
    if (id == "upwind") return upwind(tableau, overrides);
    if (id == "muscl2") return muscl2(tableau, overrides);
    if (id == "leblanc_n2" || id == "leblanc_n5") return leblanc(tableau, overrides);
    std::string valid;
    for (const auto& e : experiment_ids()) valid += valid.empty() ? e : ", " + e;
    throw std::invalid_argument("unknown experiment '" + std::string(id) +
                                "'; valid experiments: " + valid);
  }();
  config.dt_factor = dt_factor;
  if (overrides.t_final) config.t_final = *overrides.t_final;
  if (overrides.tolerance) config.tolerance = *overrides.tolerance;
  if (overrides.monitor) config.monitor = *overrides.monitor;
  if (overrides.tv_wrap) config.tv_wrap = *overrides.tv_wrap;
  return config;
}

}  // namespace rkstab
