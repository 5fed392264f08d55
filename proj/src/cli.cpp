#include "rkstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rkstab/io.hpp"
#include "rkstab/limits.hpp"
#include "rkstab/tableau.hpp"

namespace rkstab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct FileConfig {
  std::optional<std::string> experiment;
  std::optional<std::string> scheme;
  std::optional<double> dt_factor;
  PresetOverrides overrides;
};

LaxFriedrichsVariant lf_from_string(const std::string& s) {
  if (s == "local") return LaxFriedrichsVariant::local;
  if (s == "global") return LaxFriedrichsVariant::global;
  throw std::invalid_argument("lf must be 'local' or 'global', got '" + s + "'");
}

bool on_off(const std::string& s) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw std::invalid_argument("expected 'on' or 'off', got '" + s + "'");
}

FileConfig read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed config " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const std::set<std::string> known = {"experiment", "scheme",    "dt_factor", "t_final",
                                              "n_cells",    "monitor",   "tolerance", "tv_wrap",
                                              "lf"};
  FileConfig cfg;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (!known.contains(key)) throw std::invalid_argument("unknown config key '" + key + "'");
      if (key == "experiment") cfg.experiment = value.get<std::string>();
      if (key == "scheme") cfg.scheme = value.get<std::string>();
      if (key == "dt_factor") cfg.dt_factor = value.get<double>();
      if (key == "t_final") cfg.overrides.t_final = value.get<double>();
      if (key == "n_cells") cfg.overrides.n_cells = value.get<std::size_t>();
      if (key == "monitor") cfg.overrides.monitor = monitor_kind_from_string(value.get<std::string>());
      if (key == "tolerance") cfg.overrides.tolerance = value.get<double>();
      if (key == "tv_wrap") cfg.overrides.tv_wrap = value.get<bool>();
      if (key == "lf") cfg.overrides.lf_variant = lf_from_string(value.get<std::string>());
    }
  } catch (const json::type_error& e) {
    throw std::invalid_argument("bad value type in config " + path.string() + ": " + e.what());
  }
  return cfg;
}

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

void merge(PresetOverrides& into, const PresetOverrides& from) {
  take(into.n_cells, from.n_cells);
  take(into.t_final, from.t_final);
  take(into.tolerance, from.tolerance);
  take(into.monitor, from.monitor);
  take(into.tv_wrap, from.tv_wrap);
  take(into.lf_variant, from.lf_variant);
}

std::vector<std::string> expand_schemes(const std::vector<std::string>& schemes) {
  if (schemes.empty()) return builtin_scheme_ids();
  std::vector<std::string> out;
  for (const auto& s : schemes) {
    if (s == "all") {
      out.insert(out.end(), builtin_scheme_ids().begin(), builtin_scheme_ids().end());
    } else {
      builtin_scheme(s);  // validates
      out.push_back(s);
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

SimulationConfig resolve_run_config(const RunOptions& options) {
  FileConfig file;
  if (options.config_path) file = read_config_file(*options.config_path);
  const auto preset = options.preset ? options.preset : file.experiment;
  if (!preset) throw std::invalid_argument("no experiment given (positional preset or config)");
  const auto scheme = options.scheme ? options.scheme : file.scheme;
  const auto tableau = builtin_scheme(scheme.value_or("forward_euler"));
  const double dt_factor = options.dt_factor.value_or(file.dt_factor.value_or(1.0));
  PresetOverrides overrides = file.overrides;
  merge(overrides, options.overrides);
  auto config = experiment_preset(*preset, tableau, dt_factor, overrides);
  validate(config);
  return config;
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  const SimulationConfig config = resolve_run_config(options);
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + options.out_dir.string() + ": " + ec.message());

  const auto record = simulate(config);
  std::ostringstream history, field;
  write_history_csv(history, record);
  write_final_field_csv(field, config, record);
  write_file(options.out_dir / "history.csv", history.str());
  write_file(options.out_dir / "final_field.csv", field.str());
  write_file(options.out_dir / "verdict.json", verdict_json(config, record).dump(2) + "\n");

  out << config.tableau.name << " on " << scheme_name(config.scheme) << ", dt_factor "
      << config.dt_factor << ": " << record.steps << " steps, "
      << (record.pass() ? "stable" : "stability violation");
  if (!record.shifted_pass()) out << " (shifted states violated)";
  out << '\n';
  if (record.aborted) err << "run aborted: " << record.abort_reason << '\n';
  return record.pass() ? kExitOk : kExitViolation;
}

int cmd_limits(const LimitsOptions& options, std::ostream& out, std::ostream&) {
  const auto schemes = expand_schemes(options.schemes);
  // Validate the preset before the (long) scan.
  experiment_preset(options.preset, builtin_scheme("forward_euler"), 1.0, options.overrides);

  LimitTableOptions table_options{
      .c_min = options.c_min,
      .c_max = options.c_max,
      .granularity = options.granularity,
      .refine = options.refine,
      .threads = options.threads,
      .overrides = options.overrides,
  };
  const auto table = limits_table(options.preset, schemes, table_options);

  const fs::path json_path = options.out_path.value_or("limits_" + options.preset + ".json");
  if (json_path.has_parent_path()) fs::create_directories(json_path.parent_path());
  fs::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  std::ostringstream csv;
  write_limits_csv(csv, table, options.c_min);
  write_file(json_path, to_json(table).dump(2) + "\n");
  write_file(csv_path, csv.str());

  out << format_limits_summary(table, options.c_min);
  return kExitOk;
}

int cmd_coef(const std::string& target, std::ostream& out, std::ostream& err) {
  ButcherTableau tableau;
  const auto& ids = builtin_scheme_ids();
  if (std::find(ids.begin(), ids.end(), target) != ids.end()) {
    tableau = builtin_scheme(target);
  } else {
    std::ifstream in(target);
    if (!in) {
      err << "'" << target << "' is neither a builtin scheme nor a readable tableau file\n";
      return kExitUsage;
    }
    try {
      tableau = read_tableau(in);
    } catch (const TableauParseError& e) {
      err << target << ":" << e.line() << ": " << e.what() << '\n';
      return kExitUsage;
    }
    const auto report = validate_consistency(tableau);
    if (!report.ok()) {
      for (const auto& issue : report.issues) err << target << ": " << issue.message << '\n';
      return kExitUsage;
    }
  }
  const auto analysis = ssp_coefficient(tableau);
  out << "c_ssp = ";
  if (analysis.ssp_coefficient == 0.0) {
    out << "0";
  } else {
    out << std::fixed << std::setprecision(6) << analysis.ssp_coefficient;
  }
  out << ", assumption1 = " << (analysis.satisfies_assumption1 ? "true" : "false") << '\n';
  return kExitOk;
}

int main(int argc, char** argv) {
  CLI::App app{"Stability step-size analysis of explicit Runge-Kutta methods on 1D conservation laws"};
  app.require_subcommand(1);

  RunOptions run;
  std::string run_out = ".";
  std::string tv_wrap, lf;
  std::optional<std::size_t> n_cells;
  std::optional<double> t_final, tolerance;
  auto* run_cmd = app.add_subcommand("run", "Run one simulation and record stability monitors");
  run_cmd->add_option("preset", run.preset, "Experiment preset")
      ->check(CLI::IsMember(experiment_ids()));
  run_cmd->add_option("--config", run.config_path, "JSON config file");
  run_cmd->add_option("--scheme", run.scheme, "RK scheme id");
  run_cmd->add_option("--dt-factor", run.dt_factor, "Multiplier of the forward Euler step");
  run_cmd->add_option("--out", run_out, "Output directory");

  LimitsOptions limits;
  std::string limits_out;
  auto* limits_cmd = app.add_subcommand("limits", "Measure c_s and c_p by scanning dt_factor");
  limits_cmd->add_option("preset", limits.preset, "Experiment preset")
      ->required()
      ->check(CLI::IsMember(experiment_ids()));
  limits_cmd->add_option("--schemes,--scheme", limits.schemes, "Scheme ids or 'all'")
      ->delimiter(',');
  limits_cmd->add_option("--c-min", limits.c_min, "Smallest candidate multiplier");
  limits_cmd->add_option("--c-max", limits.c_max, "Largest candidate multiplier");
  limits_cmd->add_option("--granularity", limits.granularity, "Scan step");
  limits_cmd->add_flag("--refine", limits.refine, "Bisect each limit to granularity/10");
  limits_cmd->add_option("--threads", limits.threads, "Worker threads (0 = all cores)");
  limits_cmd->add_option("--out", limits_out, "JSON output path (CSV written alongside)");

  for (auto* cmd : {run_cmd, limits_cmd}) {
    cmd->add_option("--tv-wrap", tv_wrap, "Count the periodic closure in TV")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--lf", lf, "Lax-Friedrichs wavespeed")
        ->check(CLI::IsMember({"local", "global"}));
    cmd->add_option("--n-cells", n_cells, "Override the preset cell count");
    cmd->add_option("--t-final", t_final, "Override the preset final time");
    cmd->add_option("--tolerance", tolerance, "Monitor tolerance");
  }

  std::string coef_target;
  auto* coef_cmd = app.add_subcommand("coef", "Print the SSP coefficient of a scheme");
  coef_cmd->add_option("scheme", coef_target, "Scheme id or tableau file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    PresetOverrides overrides;
    overrides.n_cells = n_cells;
    overrides.t_final = t_final;
    overrides.tolerance = tolerance;
    if (!tv_wrap.empty()) overrides.tv_wrap = on_off(tv_wrap);
    if (!lf.empty()) overrides.lf_variant = lf_from_string(lf);

    if (*run_cmd) {
      run.out_dir = run_out;
      run.overrides = overrides;
      return cmd_run(run, std::cout, std::cerr);
    }
    if (*limits_cmd) {
      limits.overrides = overrides;
      if (!limits_out.empty()) limits.out_path = limits_out;
      return cmd_limits(limits, std::cout, std::cerr);
    }
    return cmd_coef(coef_target, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rkstab::cli
