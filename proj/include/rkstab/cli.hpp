#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rkstab/presets.hpp"

namespace rkstab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct RunOptions {
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> config_path;
  std::optional<std::string> scheme;
  std::optional<double> dt_factor;
  std::filesystem::path out_dir = ".";
  PresetOverrides overrides;
};

struct LimitsOptions {
  std::string preset;
  std::vector<std::string> schemes;  // empty or {"all"} means all five
  double c_min = 0.1;
  double c_max = 5.0;
  double granularity = 0.1;
  bool refine = false;
  unsigned threads = 0;
  std::optional<std::filesystem::path> out_path;
  PresetOverrides overrides;
};

/// Resolved simulation setup of `run`: preset defaults, then config-file
/// keys, then explicit flags. Throws std::invalid_argument on bad input.
SimulationConfig resolve_run_config(const RunOptions& options);

/// Writes history.csv, final_field.csv and verdict.json into out_dir.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Writes the JSON table to out_path and a CSV mirror next to it.
int cmd_limits(const LimitsOptions& options, std::ostream& out, std::ostream& err);

/// `target` is a builtin scheme id or a path to a tableau file.
int cmd_coef(const std::string& target, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main(int argc, char** argv);

}  // namespace rkstab::cli
