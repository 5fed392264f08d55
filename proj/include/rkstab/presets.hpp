#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rkstab/simulation.hpp"

namespace rkstab {

/// The five reference experiments:
///   dissipative  - energy-dissipative Burgers, Gaussian pulse on [-1, 1]
///   upwind       - first-order upwind Burgers, sine wave on [0, 2]
///   muscl2       - minmod MUSCL Burgers, step on [-10, 70]
///   leblanc_n2   - Leblanc shock tube, local Lax-Friedrichs, 600 cells
///   leblanc_n5   - same problem, labelled after the 100-element layout
const std::vector<std::string>& experiment_ids();

struct PresetOverrides {
  std::optional<std::size_t> n_cells;
  std::optional<double> t_final;
  std::optional<double> tolerance;
  std::optional<MonitorKind> monitor;
  std::optional<bool> tv_wrap;
  std::optional<LaxFriedrichsVariant> lf_variant;
};

/// Throws std::invalid_argument listing valid ids for an unknown id.
SimulationConfig experiment_preset(std::string_view id, const ButcherTableau& tableau,
                                   double dt_factor = 1.0, const PresetOverrides& overrides = {});

/// Default cell count of the dissipative experiment. Finer grids push the
/// forward Euler energy-decrease limit of the Gaussian pulse below the
/// 0.006 dx step bound, so forward Euler would no longer be stable at c = 1.
inline constexpr std::size_t kDissipativeCells = 50;
inline constexpr double kDissipativeFinalTime = 1.0;

}  // namespace rkstab
