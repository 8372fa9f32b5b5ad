#ifndef SYMLOC_BENCH_HPP
#define SYMLOC_BENCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symloc/environment.hpp"
#include "symloc/filter_config.hpp"
#include "symloc/metrics.hpp"
#include "symloc/runner.hpp"
#include "symloc/trajectory.hpp"

namespace symloc {

/// Filter motion-noise setting relative to the simulator scales: Sigma keeps
/// M = M0, FourSigma inflates to 4*M0. Both use R = 2*R0.
enum class NoiseSetting { Sigma, FourSigma };

std::string setting_name(NoiseSetting s);
NoiseSetting setting_from_name(const std::string& name);

struct ExperimentConfig {
  std::string map = "world10";  // preset name or map file path
  std::vector<FilterKind> filters = {FilterKind::PF, FilterKind::MKF};
  std::vector<int> particle_grid = {100, 500, 1000, 4000};
  std::vector<NoiseSetting> settings = {NoiseSetting::Sigma};
  int n_trajectories = 500;
  int steps = 100;
  double speed_min = 0.0;
  double speed_max = 0.5;
  int k_measure = 5;

  // Simulator noise scales; filters derive M and R from these.
  double sigma_d0_sq = 0.01;
  double sigma_r0 = 0.02;
  double sigma_phi0 = 0.01 * two_pi;

  std::uint64_t seed = 20240725;
  int workers = 0;  // 0 -> hardware concurrency
  int q_samples = 64;
  // Benchmarks resample on the N_eff <= N/2 trigger rather than every step:
  // unconditional resampling collapses multimodal beliefs long before the
  // evidence can disambiguate symmetric worlds, which penalizes every filter.
  bool resample_every_step = false;
  double neff_threshold_fraction = 0.5;
  std::optional<bool> predicted_measurement_noise;
  bool roughen = true;

  /// "accuracy" sweeps filters x particle_grid x settings;
  /// "runtime" times matched (PF N, MKF N) pairs instead.
  std::string mode = "accuracy";
  std::vector<std::pair<int, int>> runtime_pairs = {{2000, 200}};
};

/// Resolve a preset name, else load the path as a map file.
Environment resolve_map(const std::string& map);

ExperimentConfig experiment_config_from_json_text(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);
std::string experiment_config_to_json_text(const ExperimentConfig& cfg);

FilterConfig make_filter_config(const ExperimentConfig& cfg, NoiseSetting setting,
                                int particle_count);
TrajectoryParams make_trajectory_params(const ExperimentConfig& cfg);

/// One benchmark cell: a filter at a particle count under a noise setting.
struct CellSpec {
  FilterKind filter = FilterKind::PF;
  int particle_count = 0;  // 0 for the EKF
  NoiseSetting setting = NoiseSetting::Sigma;
};

struct CellResult {
  CellSpec spec;
  AggregateRow row;
  std::vector<RunSummary> runs;  // ordered by trajectory index
};

struct RunReport {
  ExperimentConfig config;
  std::string environment;
  double world_w = 0.0;
  double world_h = 0.0;
  std::vector<CellResult> cells;
  int trajectory_restarts = 0;
  std::string timestamp;  // UTC, ISO 8601
  std::string hardware_note;
  std::string version;
};

/// Invoked as trajectories finish; may be called from worker threads.
using ProgressFn = std::function<void(int done, int total)>;

/// Paired design: each trajectory is generated once and every cell runs on
/// it, so cross-cell comparisons share ground truth. Bit-identical results
/// for a fixed seed regardless of worker count.
RunReport run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress = {});

/// Head-to-head timing of (PF N, MKF N) pairs under the first configured
/// setting, reporting FSE next to wall time per cell.
RunReport runtime_benchmark(const ExperimentConfig& cfg,
                            const std::vector<std::pair<int, int>>& pf_mkf_pairs,
                            const ProgressFn& progress = {});

/// Writes into `out_dir`:
///   report.json  - aggregate rows + config echo + provenance + timing
///   results.csv  - per-run mse/fse (timing-free; byte-stable for a seed)
///   runs.csv     - results.csv plus a time_s column, for plotting
void write_report(const RunReport& report, const std::string& out_dir);

/// Render the aggregate grid of a report.json document as aligned text
/// (accuracy and runtime sections; cells whose MSE exceeds the random-guess
/// level are marked "useless") or as CSV rows.
std::string render_report_tables(const std::string& report_json_text);
std::string render_report_csv(const std::string& report_json_text);

}  // namespace symloc

#endif
