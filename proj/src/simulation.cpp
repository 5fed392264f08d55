#include "rkstab/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rkstab {

namespace {

double worst(const std::vector<MonitorVerdict>& verdicts, bool positivity) {
  double w = verdicts.front().delta;
  for (const auto& v : verdicts) w = positivity ? std::min(w, v.delta) : std::max(w, v.delta);
  return w;
}

void note_failure(CriterionOutcome& outcome, std::size_t step,
                  const std::vector<MonitorVerdict>& verdicts) {
  if (!outcome.pass) return;
  for (const auto& v : verdicts) {
    if (!v.pass) {
      outcome.pass = false;
      outcome.first_failure_step = step;
      outcome.first_failure = v;
      return;
    }
  }
}

void note_abort(CriterionOutcome& outcome, std::size_t step) {
  if (!outcome.pass) return;
  outcome.pass = false;
  outcome.first_failure_step = step;
}

}  // namespace

void validate(const SimulationConfig& config) {
  const auto report = validate_consistency(config.tableau);
  if (!report.ok()) {
    throw std::invalid_argument("tableau '" + config.tableau.name +
                                "' is inconsistent: " + report.issues.front().message);
  }
  if (!(config.t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (!(config.dt_factor > 0.0)) throw std::invalid_argument("dt_factor must be positive");
  if (config.tolerance < 0.0) throw std::invalid_argument("tolerance must be non-negative");
  if (config.record_every == 0) throw std::invalid_argument("record_every must be positive");
  if (config.monitor == MonitorKind::positivity && !is_euler(config.scheme)) {
    throw std::invalid_argument("the positivity monitor needs an Euler scheme");
  }
  if (config.monitor != MonitorKind::positivity && is_euler(config.scheme)) {
    throw std::invalid_argument("Euler schemes are monitored for positivity");
  }
}

Monitor make_monitor(const SimulationConfig& config) {
  Monitor m;
  m.kind = config.monitor;
  m.tolerance = config.tolerance;
  m.tv_wrap = config.tv_wrap.value_or(config.grid.periodic());
  m.n_cells = config.grid.n_cells();
  return m;
}

SimulationRecord simulate(const SimulationConfig& config, const SimulateOptions& options) {
  validate(config);
  const Discretization disc(config.scheme, config.grid);
  const RhsFunction rhs = [&disc](std::span<const double> q, std::span<double> out) {
    disc.rhs(q, out);
  };

  State q = initial_state(config.ic, config.grid, config.scheme);
  Monitor monitor = make_monitor(config);
  const bool positivity = monitor.kind == MonitorKind::positivity;

  SimulationRecord rec;
  if (positivity && !positivity_check(q.data(), q.data() + monitor.n_cells,
                                      q.data() + 2 * monitor.n_cells, monitor.n_cells)
                         .pass) {
    rec.aborted = true;
    rec.abort_reason = "initial state is not admissible";
    note_abort(rec.step_criterion, 0);
    note_abort(rec.shifted_criterion, 0);
    rec.final_state = q;
    return rec;
  }
  monitor.calibrate(q);
  rec.initial_value = monitor.functional(q);

  const double t_final = config.t_final;
  double t = 0.0;
  std::size_t step = 0;
  while (t < t_final) {
    ++step;
    double dt = 0.0;
    StageTrace trace;
    try {
      dt = config.dt_factor * disc.dt_fe(q);
      // Land exactly on t_final, absorbing a sliver that roundoff would leave.
      if (!(t + dt < t_final - 1e-12 * t_final)) dt = t_final - t;
      trace = rk_step_instrumented(config.tableau, rhs, q, dt);
    } catch (const std::exception& e) {
      rec.aborted = true;
      rec.abort_reason = "step " + std::to_string(step) + ": " + e.what();
      note_abort(rec.step_criterion, step);
      note_abort(rec.shifted_criterion, step);
      break;
    }

    const auto step_verdicts = check_step_criterion(monitor, trace);
    const auto shifted_verdicts = check_shifted_criterion(monitor, trace);
    note_failure(rec.step_criterion, step, step_verdicts);
    note_failure(rec.shifted_criterion, step, shifted_verdicts);
    if (options.observer) options.observer(step, trace, step_verdicts, shifted_verdicts);

    t = (dt == t_final - t) ? t_final : t + dt;
    q = std::move(trace.q_rk);
    rec.steps = step;

    const bool last = t >= t_final;
    if (step % config.record_every == 0 || last) {
      rec.times.push_back(t);
      rec.monitor_step_values.push_back(monitor.functional(q));
      std::vector<MonitorVerdict> stages(step_verdicts.begin(), step_verdicts.end() - 1);
      rec.monitor_stage_worst.push_back(worst(stages, positivity));
      rec.monitor_shifted_worst.push_back(worst(shifted_verdicts, positivity));
      if (positivity) {
        const std::size_t n = monitor.n_cells;
        const auto p = positivity_check(q.data(), q.data() + n, q.data() + 2 * n, n);
        rec.min_rho.push_back(p.min_rho);
        rec.min_rhoe.push_back(p.min_rhoe);
      }
    }
    if (options.stop_when_decided && !rec.step_criterion.pass && !rec.shifted_criterion.pass) {
      break;
    }
  }
  rec.final_time = t;
  rec.final_state = std::move(q);
  return rec;
}

ScalarField final_scalar_field(const SimulationConfig& config, const SimulationRecord& record) {
  if (is_euler(config.scheme)) throw std::invalid_argument("final_scalar_field: Euler run");
  return ScalarField(config.grid, record.final_state);
}

EulerField final_euler_field(const SimulationConfig& config, const SimulationRecord& record) {
  if (!is_euler(config.scheme)) throw std::invalid_argument("final_euler_field: scalar run");
  return unflatten(record.final_state, config.grid, std::get<LlfEuler>(config.scheme).gamma);
}

}  // namespace rkstab
