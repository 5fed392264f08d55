#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rkstab/stepper.hpp"

namespace rkstab {

enum class MonitorKind { energy, tv, positivity };

std::string to_string(MonitorKind k);
/// Throws std::invalid_argument for unknown names.
MonitorKind monitor_kind_from_string(std::string_view s);

/// A stability functional G together with its pass/fail slack.
///
/// For energy and tv a candidate passes when G(candidate) - G(reference) is
/// at most tolerance * scale, where scale = max(1, G(q^0)) is fixed once per
/// run via calibrate(). Positivity ignores the tolerance: every density and
/// internal energy must be strictly positive.
struct Monitor {
  MonitorKind kind = MonitorKind::energy;
  double tolerance = 1e-12;
  /// Include the periodic closure term in the total variation.
  bool tv_wrap = true;
  /// Cells per component; used to split Euler states.
  std::size_t n_cells = 0;
  double scale = 1.0;

  /// energy: 0.5 q^T q; tv: total variation; positivity: min(min rho, min rho e).
  double functional(std::span<const double> q) const;
  /// Sets scale from the initial state.
  void calibrate(std::span<const double> q0);
  double slack() const;
};

enum class Location { step, stage, shifted };

struct MonitorVerdict {
  bool pass = true;
  /// G(candidate) - G(reference), or min(rho, rho e) for positivity.
  double delta = 0.0;
  Location where = Location::step;
  /// 1-based stage or shifted-state index; 0 for the step result.
  int index = 0;
};

bool all_pass(const std::vector<MonitorVerdict>& verdicts);

/// One verdict per stage solution q^i plus one for q^RK.
std::vector<MonitorVerdict> check_step_criterion(const Monitor& monitor, const StageTrace& trace);

/// One verdict per shifted state q^n + dt R^j.
std::vector<MonitorVerdict> check_shifted_criterion(const Monitor& monitor,
                                                    const StageTrace& trace);

/// Strict positivity of every q^i, q^RK and q^n + dt R^j of an Euler trace.
std::vector<MonitorVerdict> positivity_of_trace(const StageTrace& trace, std::size_t n_cells);

}  // namespace rkstab
