#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rkstab/fields.hpp"
#include "rkstab/initial_conditions.hpp"
#include "rkstab/monitors.hpp"
#include "rkstab/spatial.hpp"
#include "rkstab/stepper.hpp"
#include "rkstab/tableau.hpp"

namespace rkstab {

struct SimulationConfig {
  SchemeSpec scheme;
  ButcherTableau tableau;
  Grid1D grid;
  InitialCondition ic;
  double t_final = 1.0;
  /// Each step uses dt = dt_factor * dt_FE(q^n).
  double dt_factor = 1.0;
  MonitorKind monitor = MonitorKind::energy;
  double tolerance = 1e-12;
  /// Defaults to the grid's periodicity.
  std::optional<bool> tv_wrap{};
  /// Stride of the recorded history; the final step is always recorded.
  std::size_t record_every = 1;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const SimulationConfig& config);

Monitor make_monitor(const SimulationConfig& config);

struct CriterionOutcome {
  bool pass = true;
  /// 1-based step index of the first violation.
  std::optional<std::size_t> first_failure_step;
  std::optional<MonitorVerdict> first_failure;
};

struct SimulationRecord {
  std::vector<double> times;
  /// G(q^RK); min(rho, rho e) for positivity.
  std::vector<double> monitor_step_values;
  /// Worst G(q^i) - G(q^n) over stages (max; min of margins for positivity).
  std::vector<double> monitor_stage_worst;
  /// Worst G(q^n + dt R^j) - G(q^n) over j.
  std::vector<double> monitor_shifted_worst;
  /// Euler runs only.
  std::vector<double> min_rho;
  std::vector<double> min_rhoe;

  double initial_value = 0.0;
  State final_state;
  double final_time = 0.0;
  std::size_t steps = 0;

  /// Stage and step solutions (the c^p criterion).
  CriterionOutcome step_criterion;
  /// Shifted Euler states (the c^s criterion).
  CriterionOutcome shifted_criterion;

  bool aborted = false;
  std::string abort_reason;

  bool pass() const { return step_criterion.pass; }
  bool shifted_pass() const { return shifted_criterion.pass; }
};

using StepObserver =
    std::function<void(std::size_t step, const StageTrace& trace,
                       const std::vector<MonitorVerdict>& step_verdicts,
                       const std::vector<MonitorVerdict>& shifted_verdicts)>;

struct SimulateOptions {
  StepObserver observer;
  /// Stop as soon as both criteria have failed; the verdict cannot change
  /// after that.
  bool stop_when_decided = false;
};

/// Advances to t_final; RHS failures end the run with both criteria failed.
SimulationRecord simulate(const SimulationConfig& config, const SimulateOptions& options = {});

ScalarField final_scalar_field(const SimulationConfig& config, const SimulationRecord& record);
EulerField final_euler_field(const SimulationConfig& config, const SimulationRecord& record);

}  // namespace rkstab
