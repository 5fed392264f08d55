#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkstab/presets.hpp"
#include "rkstab/simulation.hpp"

namespace rkstab {

struct LimitSearchConfig {
  /// dt_factor is overwritten by each candidate.
  SimulationConfig base;
  double c_min = 0.1;
  double c_max = 5.0;
  double granularity = 0.1;
  /// Bisect each limit down to granularity / 10 after the scan.
  bool refine = false;
  /// Worker threads for candidate runs; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CandidateOutcome {
  double c = 0.0;
  bool step_pass = false;
  bool shifted_pass = false;
  bool aborted = false;
};

/// Measured step-size multipliers. A limit is the largest candidate c such
/// that every scanned candidate up to and including c passed; nullopt means
/// the run already fails at c_min. The largest passing candidate anywhere
/// in the scan is kept separately so that pass regions with holes stay
/// visible.
struct LimitResult {
  std::string scheme;
  MonitorKind monitor = MonitorKind::energy;
  std::optional<double> c_p;
  std::optional<double> c_s;
  std::optional<double> c_p_max_passing;
  std::optional<double> c_s_max_passing;
  bool p_contiguous = true;
  bool s_contiguous = true;
  std::vector<CandidateOutcome> per_candidate;
};

void validate(const LimitSearchConfig& cfg);

/// Candidate multipliers c_min, c_min + g, ..., up to c_max.
std::vector<double> candidate_grid(double c_min, double c_max, double granularity);

LimitResult find_limits(const LimitSearchConfig& cfg);

struct LimitRow {
  std::string scheme;
  double c_ssp = 0.0;
  LimitResult limits;
};

struct LimitTable {
  std::string experiment;
  std::vector<LimitRow> rows;
};

struct LimitTableOptions {
  double c_min = 0.1;
  double c_max = 5.0;
  double granularity = 0.1;
  bool refine = false;
  unsigned threads = 0;
  PresetOverrides overrides;
};

/// One row per scheme id, joining the SSP coefficient with find_limits.
LimitTable limits_table(const std::string& experiment, const std::vector<std::string>& schemes,
                        const LimitTableOptions& options = {});

}  // namespace rkstab
