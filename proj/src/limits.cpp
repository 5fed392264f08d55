#include "rkstab/limits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rkstab {

namespace {

CandidateOutcome run_candidate(const SimulationConfig& base, double c) {
  SimulationConfig config = base;
  config.dt_factor = c;
  config.record_every = std::numeric_limits<std::size_t>::max();
  SimulateOptions options;
  options.stop_when_decided = true;
  const auto rec = simulate(config, options);
  return {c, rec.step_criterion.pass, rec.shifted_criterion.pass, rec.aborted};
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

double snap(double c) { return std::round(c * 1e9) / 1e9; }

/// Bisects the integer sub-grid between a passing `lo` and a failing
/// `lo + granularity`.
double refine_limit(const SimulationConfig& base, double lo, double granularity, bool step) {
  const double fine = granularity / 10.0;
  int good = 0;
  int bad = 10;
  while (bad - good > 1) {
    const int mid = (good + bad) / 2;
    const auto out = run_candidate(base, snap(lo + mid * fine));
    ((step ? out.step_pass : out.shifted_pass) ? good : bad) = mid;
  }
  return snap(lo + good * fine);
}

}  // namespace

void validate(const LimitSearchConfig& cfg) {
  if (!(cfg.c_min > 0.0)) throw std::invalid_argument("c_min must be positive");
  if (!(cfg.granularity > 0.0)) throw std::invalid_argument("granularity must be positive");
  if (!(cfg.c_max > cfg.c_min)) throw std::invalid_argument("c_max must exceed c_min");
  validate(cfg.base);
}

std::vector<double> candidate_grid(double c_min, double c_max, double granularity) {
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double c = snap(c_min + static_cast<double>(k) * granularity);
    if (c > c_max + 1e-9) break;
    out.push_back(c);
  }
  return out;
}

LimitResult find_limits(const LimitSearchConfig& cfg) {
  validate(cfg);
  const auto grid = candidate_grid(cfg.c_min, cfg.c_max, cfg.granularity);

  LimitResult result;
  result.scheme = cfg.base.tableau.name;
  result.monitor = cfg.base.monitor;
  result.per_candidate.resize(grid.size());
  parallel_for(grid.size(), cfg.threads,
               [&](std::size_t i) { result.per_candidate[i] = run_candidate(cfg.base, grid[i]); });

  bool p_run = true;
  bool s_run = true;
  for (const auto& cand : result.per_candidate) {
    p_run = p_run && cand.step_pass;
    s_run = s_run && cand.shifted_pass;
    if (p_run) result.c_p = cand.c;
    if (s_run) result.c_s = cand.c;
    if (cand.step_pass) result.c_p_max_passing = cand.c;
    if (cand.shifted_pass) result.c_s_max_passing = cand.c;
  }
  result.p_contiguous = result.c_p == result.c_p_max_passing;
  result.s_contiguous = result.c_s == result.c_s_max_passing;

  if (cfg.refine) {
    const double last = grid.back();
    if (result.c_p && *result.c_p < last) {
      result.c_p = refine_limit(cfg.base, *result.c_p, cfg.granularity, true);
    }
    if (result.c_s && *result.c_s < last) {
      result.c_s = refine_limit(cfg.base, *result.c_s, cfg.granularity, false);
    }
  }
  return result;
}

LimitTable limits_table(const std::string& experiment, const std::vector<std::string>& schemes,
                        const LimitTableOptions& options) {
  LimitTable table;
  table.experiment = experiment;
  for (const auto& id : schemes) {
    const auto tableau = builtin_scheme(id);
    LimitSearchConfig cfg{
        .base = experiment_preset(experiment, tableau, 1.0, options.overrides),
        .c_min = options.c_min,
        .c_max = options.c_max,
        .granularity = options.granularity,
        .refine = options.refine,
        .threads = options.threads,
    };
    table.rows.push_back({id, ssp_coefficient(tableau).ssp_coefficient, find_limits(cfg)});
  }
  return table;
}

}  // namespace rkstab
