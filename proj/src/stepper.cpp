#include "rkstab/stepper.hpp"

namespace rkstab {

StageTrace rk_step_instrumented(const ButcherTableau& tableau, const RhsFunction& rhs,
                                std::span<const double> q_n, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk_step_instrumented: dt must be positive");
  const int s = tableau.stages();
  const std::size_t n = q_n.size();

  StageTrace trace;
  trace.q_n.assign(q_n.begin(), q_n.end());
  trace.dt = dt;
  trace.stage_solutions.reserve(s);
  trace.stage_derivatives.reserve(s);
  trace.shifted_states.reserve(s);

  for (int i = 0; i < s; ++i) {
    State qi = trace.q_n;
    for (int j = 0; j < i; ++j) {
      const double w = dt * tableau.a(i, j);
      if (w == 0.0) continue;
      const auto& rj = trace.stage_derivatives[j];
      for (std::size_t k = 0; k < n; ++k) qi[k] += w * rj[k];
    }
    State ri(n);
    try {
      rhs(qi, ri);
    } catch (const std::exception& e) {
      throw StepFailed(i + 1, e.what());
    }
    State shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = trace.q_n[k] + dt * ri[k];
    trace.stage_solutions.push_back(std::move(qi));
    trace.stage_derivatives.push_back(std::move(ri));
    trace.shifted_states.push_back(std::move(shifted));
  }

  trace.q_rk = trace.q_n;
  for (int j = 0; j < s; ++j) {
    const double w = dt * tableau.b(j);
    if (w == 0.0) continue;
    const auto& rj = trace.stage_derivatives[j];
    for (std::size_t k = 0; k < n; ++k) trace.q_rk[k] += w * rj[k];
  }
  return trace;
}

State modified_representation_stage(const ButcherTableau& tableau, const StageTrace& trace,
                                    int i) {
  if (i < 1 || i > trace.stages()) {
    throw std::out_of_range("modified_representation_stage: stage index out of range");
  }
  const int row = i - 1;
  const std::size_t n = trace.q_n.size();
  State out(n);
  const double keep = 1.0 - tableau.c(row);
  for (std::size_t k = 0; k < n; ++k) out[k] = keep * trace.q_n[k];
  for (int j = 0; j < row; ++j) {
    const double w = tableau.a(row, j);
    if (w == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] += w * trace.shifted_states[j][k];
  }
  return out;
}

State modified_representation_result(const ButcherTableau& tableau, const StageTrace& trace) {
  const std::size_t n = trace.q_n.size();
  State out(n, 0.0);
  for (int j = 0; j < trace.stages(); ++j) {
    const double w = tableau.b(j);
    for (std::size_t k = 0; k < n; ++k) out[k] += w * trace.shifted_states[j][k];
  }
  return out;
}

}  // namespace rkstab
