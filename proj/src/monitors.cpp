#include "rkstab/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rkstab/fields.hpp"

namespace rkstab {

namespace {

PositivityVerdict positivity(std::span<const double> q, std::size_t n) {
  if (q.size() != 3 * n) throw std::invalid_argument("positivity monitor: state size mismatch");
  return positivity_check(q.data(), q.data() + n, q.data() + 2 * n, n);
}

double positivity_margin(const PositivityVerdict& v) { return std::min(v.min_rho, v.min_rhoe); }

MonitorVerdict judge(const Monitor& monitor, std::span<const double> candidate, double reference,
                     Location where, int index) {
  MonitorVerdict v;
  v.where = where;
  v.index = index;
  if (monitor.kind == MonitorKind::positivity) {
    const auto p = positivity(candidate, monitor.n_cells);
    v.pass = p.pass;
    v.delta = positivity_margin(p);
  } else {
    v.delta = monitor.functional(candidate) - reference;
    v.pass = v.delta <= monitor.slack();
  }
  return v;
}

}  // namespace

std::string to_string(MonitorKind k) {
  switch (k) {
    case MonitorKind::energy:
      return "energy";
    case MonitorKind::tv:
      return "tv";
    case MonitorKind::positivity:
      return "positivity";
  }
  return "unknown";
}

MonitorKind monitor_kind_from_string(std::string_view s) {
  if (s == "energy") return MonitorKind::energy;
  if (s == "tv") return MonitorKind::tv;
  if (s == "positivity") return MonitorKind::positivity;
  throw std::invalid_argument("unknown monitor '" + std::string(s) +
                              "'; valid monitors: energy, tv, positivity");
}

double Monitor::functional(std::span<const double> q) const {
  switch (kind) {
    case MonitorKind::energy: {
      double sum = 0.0;
      for (double v : q) sum += v * v;
      return 0.5 * sum;
    }
    case MonitorKind::tv: {
      double tv = 0.0;
      for (std::size_t i = 0; i + 1 < q.size(); ++i) tv += std::abs(q[i + 1] - q[i]);
      if (tv_wrap && q.size() > 1) tv += std::abs(q.front() - q.back());
      return tv;
    }
    case MonitorKind::positivity:
      return positivity_margin(positivity(q, n_cells));
  }
  return 0.0;
}

void Monitor::calibrate(std::span<const double> q0) {
  scale = kind == MonitorKind::positivity ? 1.0 : std::max(1.0, functional(q0));
}

double Monitor::slack() const {
  if (tolerance < 0.0) throw std::invalid_argument("Monitor: tolerance must be non-negative");
  return tolerance * scale;
}

bool all_pass(const std::vector<MonitorVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
}

std::vector<MonitorVerdict> check_step_criterion(const Monitor& monitor, const StageTrace& trace) {
  const double reference =
      monitor.kind == MonitorKind::positivity ? 0.0 : monitor.functional(trace.q_n);
  std::vector<MonitorVerdict> out;
  out.reserve(trace.stages() + 1);
  for (int i = 0; i < trace.stages(); ++i) {
    out.push_back(judge(monitor, trace.stage_solutions[i], reference, Location::stage, i + 1));
  }
  out.push_back(judge(monitor, trace.q_rk, reference, Location::step, 0));
  return out;
}

std::vector<MonitorVerdict> check_shifted_criterion(const Monitor& monitor,
                                                    const StageTrace& trace) {
  const double reference =
      monitor.kind == MonitorKind::positivity ? 0.0 : monitor.functional(trace.q_n);
  std::vector<MonitorVerdict> out;
  out.reserve(trace.stages());
  for (int j = 0; j < trace.stages(); ++j) {
    out.push_back(judge(monitor, trace.shifted_states[j], reference, Location::shifted, j + 1));
  }
  return out;
}

std::vector<MonitorVerdict> positivity_of_trace(const StageTrace& trace, std::size_t n_cells) {
  Monitor m;
  m.kind = MonitorKind::positivity;
  m.n_cells = n_cells;
  auto out = check_step_criterion(m, trace);
  auto shifted = check_shifted_criterion(m, trace);
  out.insert(out.end(), shifted.begin(), shifted.end());
  return out;
}

}  // namespace rkstab
