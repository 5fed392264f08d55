#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rkstab/tableau.hpp"

namespace rkstab {

using State = std::vector<double>;

/// Right-hand side R(q) of the semi-discrete system dq/dt = R(q).
using RhsFunction = std::function<void(std::span<const double>, std::span<double>)>;

/// Everything one explicit RK step computes, in stage order.
///
/// `shifted_states[j]` is q_n + dt * R^j: the forward Euler updates built
/// from each stage derivative. Every stage solution and the step result are
/// affine combinations of q_n and these states.
struct StageTrace {
  State q_n;
  double dt = 0.0;
  std::vector<State> stage_solutions;
  std::vector<State> stage_derivatives;
  std::vector<State> shifted_states;
  State q_rk;

  int stages() const { return static_cast<int>(stage_solutions.size()); }
};

/// Raised when the right-hand side rejects a stage input. `stage` is
/// 1-based.
class StepFailed : public std::runtime_error {
 public:
  StepFailed(int stage, const std::string& what)
      : std::runtime_error("stage " + std::to_string(stage) + ": " + what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

StageTrace rk_step_instrumented(const ButcherTableau& tableau, const RhsFunction& rhs,
                                std::span<const double> q_n, double dt);

/// Stage i (1-based) rebuilt as (1 - c_i) q_n + sum_j a_ij (q_n + dt R^j).
State modified_representation_stage(const ButcherTableau& tableau, const StageTrace& trace, int i);

/// Step result rebuilt as sum_j b_j (q_n + dt R^j).
State modified_representation_result(const ButcherTableau& tableau, const StageTrace& trace);

}  // namespace rkstab
