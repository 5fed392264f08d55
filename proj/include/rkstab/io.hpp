#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rkstab/limits.hpp"
#include "rkstab/simulation.hpp"

namespace rkstab {

/// Columns: t, G_step, worst_stage_delta, worst_shifted_delta, and for
/// Euler runs min_rho, min_rhoe. 17 significant digits.
void write_history_csv(std::ostream& os, const SimulationRecord& record);

/// Final field in the scalar (x,q) or Euler (x,rho,m,E,u,p) layout.
void write_final_field_csv(std::ostream& os, const SimulationConfig& config,
                           const SimulationRecord& record);

nlohmann::json verdict_json(const SimulationConfig& config, const SimulationRecord& record);

nlohmann::json to_json(const LimitResult& result);
nlohmann::json to_json(const LimitTable& table);

/// One row per scheme: scheme,c_ssp,c_s,c_p,c_s_max_passing,c_p_max_passing.
/// Limits below c_min are written as "<c_min".
void write_limits_csv(std::ostream& os, const LimitTable& table, double c_min);

/// Human-readable table with values rounded to one decimal.
std::string format_limits_summary(const LimitTable& table, double c_min);

}  // namespace rkstab
