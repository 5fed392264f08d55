#include "rkstab/io.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rkstab {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string where_name(Location where) {
  switch (where) {
    case Location::step:
      return "step";
    case Location::stage:
      return "stage";
    case Location::shifted:
      return "shifted";
  }
  return "unknown";
}

nlohmann::json to_json(const CriterionOutcome& c) {
  nlohmann::json j = {{"pass", c.pass}};
  j["first_failure_step"] =
      c.first_failure_step ? nlohmann::json(*c.first_failure_step) : nlohmann::json(nullptr);
  if (c.first_failure) {
    j["first_failure"] = {{"where", where_name(c.first_failure->where)},
                          {"index", c.first_failure->index},
                          {"delta", c.first_failure->delta}};
  }
  return j;
}

std::string limit_text(const std::optional<double>& v, double c_min, int precision) {
  std::ostringstream os;
  if (!v) {
    os << '<' << c_min;
  } else {
    os << std::fixed << std::setprecision(precision) << *v;
  }
  return os.str();
}

}  // namespace

void write_history_csv(std::ostream& os, const SimulationRecord& record) {
  const bool euler = !record.min_rho.empty();
  const auto old = os.precision(17);
  os << "t,G_step,worst_stage_delta,worst_shifted_delta";
  if (euler) os << ",min_rho,min_rhoe";
  os << '\n';
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    os << record.times[k] << ',' << record.monitor_step_values[k] << ','
       << record.monitor_stage_worst[k] << ',' << record.monitor_shifted_worst[k];
    if (euler) os << ',' << record.min_rho[k] << ',' << record.min_rhoe[k];
    os << '\n';
  }
  os.precision(old);
}

void write_final_field_csv(std::ostream& os, const SimulationConfig& config,
                           const SimulationRecord& record) {
  if (is_euler(config.scheme)) {
    write_csv(os, final_euler_field(config, record));
  } else {
    write_csv(os, final_scalar_field(config, record));
  }
}

nlohmann::json verdict_json(const SimulationConfig& config, const SimulationRecord& record) {
  return {
      {"scheme", scheme_name(config.scheme)},
      {"tableau", config.tableau.name},
      {"monitor", to_string(config.monitor)},
      {"dt_factor", config.dt_factor},
      {"n_cells", config.grid.n_cells()},
      {"t_final", config.t_final},
      {"final_time", record.final_time},
      {"steps", record.steps},
      {"G_initial", record.initial_value},
      {"pass", record.pass()},
      {"step_criterion", to_json(record.step_criterion)},
      {"shifted_criterion", to_json(record.shifted_criterion)},
      {"aborted", record.aborted},
      {"abort_reason", record.abort_reason},
  };
}

nlohmann::json to_json(const LimitResult& result) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : result.per_candidate) {
    candidates.push_back({{"c", c.c},
                          {"step_pass", c.step_pass},
                          {"shifted_pass", c.shifted_pass},
                          {"aborted", c.aborted}});
  }
  return {
      {"scheme", result.scheme},
      {"monitor", to_string(result.monitor)},
      {"c_p", optional_number(result.c_p)},
      {"c_s", optional_number(result.c_s)},
      {"c_p_max_passing", optional_number(result.c_p_max_passing)},
      {"c_s_max_passing", optional_number(result.c_s_max_passing)},
      {"p_contiguous", result.p_contiguous},
      {"s_contiguous", result.s_contiguous},
      {"per_candidate", candidates},
  };
}

nlohmann::json to_json(const LimitTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto j = to_json(row.limits);
    j["scheme"] = row.scheme;
    j["c_ssp"] = row.c_ssp;
    rows.push_back(std::move(j));
  }
  return {{"experiment", table.experiment}, {"rows", rows}};
}

void write_limits_csv(std::ostream& os, const LimitTable& table, double c_min) {
  os << "scheme,c_ssp,c_s,c_p,c_s_max_passing,c_p_max_passing\n";
  for (const auto& row : table.rows) {
    const auto& l = row.limits;
    os << row.scheme << ',' << limit_text(row.c_ssp, c_min, 12) << ','
       << limit_text(l.c_s, c_min, 12) << ',' << limit_text(l.c_p, c_min, 12) << ','
       << limit_text(l.c_s_max_passing, c_min, 12) << ','
       << limit_text(l.c_p_max_passing, c_min, 12) << '\n';
  }
}

std::string format_limits_summary(const LimitTable& table, double c_min) {
  std::ostringstream os;
  os << table.experiment << '\n';
  os << std::left << std::setw(16) << "scheme" << std::setw(8) << "c_ssp" << std::setw(8) << "c_s"
     << std::setw(8) << "c_p" << '\n';
  for (const auto& row : table.rows) {
    os << std::left << std::setw(16) << row.scheme << std::setw(8)
       << limit_text(row.c_ssp, c_min, 1) << std::setw(8)
       << limit_text(row.limits.c_s, c_min, 1) << std::setw(8)
       << limit_text(row.limits.c_p, c_min, 1);
    if (!row.limits.p_contiguous || !row.limits.s_contiguous) os << "  (pass region has gaps)";
    os << '\n';
  }
  return os.str();
}

}  // namespace rkstab
