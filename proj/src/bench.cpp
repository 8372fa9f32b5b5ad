#include "symloc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "symloc/map_io.hpp"
#include "symloc/presets.hpp"

namespace symloc {

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

using nlohmann::json;

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hardware_note() {
  std::ostringstream ss;
  ss << std::thread::hardware_concurrency() << " hardware threads, " << "gcc " << __VERSION__;
  return ss.str();
}

}  // namespace

std::string setting_name(NoiseSetting s) {
  return s == NoiseSetting::Sigma ? "sigma" : "4sigma";
}

NoiseSetting setting_from_name(const std::string& name) {
  if (name == "sigma" || name == "Sigma") return NoiseSetting::Sigma;
  if (name == "4sigma" || name == "4Sigma") return NoiseSetting::FourSigma;
  throw std::invalid_argument("unknown noise setting '" + name + "' (sigma, 4sigma)");
}

Environment resolve_map(const std::string& map) {
  for (const std::string& p : preset_names())
    if (map == p) return preset_environment(map);
  return load_map(map);
}

ExperimentConfig experiment_config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("experiment config: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("experiment config: top level must be an object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "map") {
      cfg.map = value.get<std::string>();
    } else if (key == "filters") {
      cfg.filters.clear();
      for (const json& f : value) cfg.filters.push_back(filter_kind_from_name(f.get<std::string>()));
    } else if (key == "particle_grid") {
      cfg.particle_grid = value.get<std::vector<int>>();
    } else if (key == "settings") {
      cfg.settings.clear();
      for (const json& s : value) cfg.settings.push_back(setting_from_name(s.get<std::string>()));
    } else if (key == "n_trajectories") {
      cfg.n_trajectories = value.get<int>();
    } else if (key == "steps") {
      cfg.steps = value.get<int>();
    } else if (key == "speed_min") {
      cfg.speed_min = value.get<double>();
    } else if (key == "speed_max") {
      cfg.speed_max = value.get<double>();
    } else if (key == "k_measure") {
      cfg.k_measure = value.get<int>();
    } else if (key == "sigma_d0_sq") {
      cfg.sigma_d0_sq = value.get<double>();
    } else if (key == "sigma_r0") {
      cfg.sigma_r0 = value.get<double>();
    } else if (key == "sigma_phi0") {
      cfg.sigma_phi0 = value.get<double>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "workers") {
      cfg.workers = value.get<int>();
    } else if (key == "q_samples") {
      cfg.q_samples = value.get<int>();
    } else if (key == "resample_every_step") {
      cfg.resample_every_step = value.get<bool>();
    } else if (key == "neff_threshold_fraction") {
      cfg.neff_threshold_fraction = value.get<double>();
    } else if (key == "predicted_measurement_noise") {
      cfg.predicted_measurement_noise = value.get<bool>();
    } else if (key == "roughen") {
      cfg.roughen = value.get<bool>();
    } else if (key == "mode") {
      cfg.mode = value.get<std::string>();
      if (cfg.mode != "accuracy" && cfg.mode != "runtime")
        throw std::runtime_error("experiment config: mode must be 'accuracy' or 'runtime'");
    } else if (key == "runtime_pairs") {
      cfg.runtime_pairs.clear();
      for (const json& p : value) {
        if (!p.is_array() || p.size() != 2)
          throw std::runtime_error("experiment config: runtime_pairs entries are [pf_n, mkf_n]");
        cfg.runtime_pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
    } else {
      throw std::runtime_error("experiment config: unknown key '" + key + "'");
    }
  }

  if (cfg.n_trajectories < 1 || cfg.steps < 1 || cfg.k_measure < 1 || cfg.q_samples < 1)
    throw std::runtime_error("experiment config: counts must be >= 1");
  if (cfg.sigma_d0_sq <= 0.0 || cfg.sigma_r0 <= 0.0 || cfg.sigma_phi0 <= 0.0)
    throw std::runtime_error("experiment config: noise scales must be positive");
  for (int n : cfg.particle_grid)
    if (n < 1) throw std::runtime_error("experiment config: particle counts must be >= 1");
  if (cfg.filters.empty() || cfg.settings.empty())
    throw std::runtime_error("experiment config: filters and settings must be non-empty");
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return experiment_config_from_json_text(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(e.what()) + " (in '" + path + "')");
  }
}

std::string experiment_config_to_json_text(const ExperimentConfig& cfg) {
  json filters = json::array();
  for (FilterKind f : cfg.filters) filters.push_back(filter_name(f));
  json settings = json::array();
  for (NoiseSetting s : cfg.settings) settings.push_back(setting_name(s));
  json pairs = json::array();
  for (const auto& [pf_n, mkf_n] : cfg.runtime_pairs) pairs.push_back({pf_n, mkf_n});
  json j{{"map", cfg.map},
         {"filters", filters},
         {"particle_grid", cfg.particle_grid},
         {"settings", settings},
         {"n_trajectories", cfg.n_trajectories},
         {"steps", cfg.steps},
         {"speed_min", cfg.speed_min},
         {"speed_max", cfg.speed_max},
         {"k_measure", cfg.k_measure},
         {"sigma_d0_sq", cfg.sigma_d0_sq},
         {"sigma_r0", cfg.sigma_r0},
         {"sigma_phi0", cfg.sigma_phi0},
         {"seed", cfg.seed},
         {"workers", cfg.workers},
         {"q_samples", cfg.q_samples},
         {"resample_every_step", cfg.resample_every_step},
         {"neff_threshold_fraction", cfg.neff_threshold_fraction},
         {"roughen", cfg.roughen},
         {"mode", cfg.mode},
         {"runtime_pairs", pairs}};
  if (cfg.predicted_measurement_noise)
    j["predicted_measurement_noise"] = *cfg.predicted_measurement_noise;
  return j.dump(2) + "\n";
}

FilterConfig make_filter_config(const ExperimentConfig& cfg, NoiseSetting setting,
                                int particle_count) {
  FilterConfig f;
  f.particle_count = particle_count;
  f.k_measure = cfg.k_measure;
  const double scale = setting == NoiseSetting::FourSigma ? 2.0 : 1.0;  // 4x covariance
  f.motion = {cfg.sigma_r0 * scale, cfg.sigma_phi0 * scale, NoiseDraw::Gaussian};
  f.measurement_sigma_sq = 2.0 * cfg.sigma_d0_sq;
  f.q_samples = cfg.q_samples;
  f.resample_every_step = cfg.resample_every_step;
  f.neff_threshold_fraction = cfg.neff_threshold_fraction;
  f.predicted_measurement_noise = cfg.predicted_measurement_noise;
  f.roughen = cfg.roughen;
  return f;
}

TrajectoryParams make_trajectory_params(const ExperimentConfig& cfg) {
  TrajectoryParams p;
  p.steps = cfg.steps;
  p.speed_min = cfg.speed_min;
  p.speed_max = cfg.speed_max;
  p.k_measure = cfg.k_measure;
  p.measurement = {cfg.sigma_d0_sq};
  p.truth_noise = {cfg.sigma_r0, cfg.sigma_phi0, NoiseDraw::Uniform};
  return p;
}

namespace {

RunReport run_cells(const ExperimentConfig& cfg, const Environment& env,
                    const std::vector<CellSpec>& cells, const ProgressFn& progress) {
  if (cfg.k_measure > static_cast<int>(env.beacons.size()))
    throw std::runtime_error("experiment: k_measure exceeds the beacon count of '" + env.name +
                             "'");
  const int n = cfg.n_trajectories;
  const TrajectoryParams traj_params = make_trajectory_params(cfg);
  std::vector<FilterConfig> filter_cfgs;
  filter_cfgs.reserve(cells.size());
  for (const CellSpec& cell : cells)
    filter_cfgs.push_back(make_filter_config(cfg, cell.setting, cell.particle_count));

  std::vector<std::vector<RunSummary>> results(cells.size(),
                                               std::vector<RunSummary>(static_cast<std::size_t>(n)));
  std::vector<int> restarts(static_cast<std::size_t>(n), 0);

  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&] {
    try {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) break;
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (first_error) break;
        }
        // Substream (i+1, 0) feeds the trajectory; (i+1, cell+1) feeds each
        // filter run: every result depends only on (seed, indices), never on
        // scheduling.
        const Trajectory traj =
            generate_trajectory(env, traj_params, derive_seed(cfg.seed, i + 1, 0));
        restarts[static_cast<std::size_t>(i)] = traj.restarts;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          Rng rng = make_stream(cfg.seed, static_cast<std::uint64_t>(i) + 1, ci + 1);
          const RunTrace trace = run_filter(cells[ci].filter, env, traj, filter_cfgs[ci], rng);
          RunSummary s;
          s.traj_id = i;
          double sum = 0.0;
          for (double e : trace.per_step_error) sum += e;
          s.mse = sum / static_cast<double>(trace.per_step_error.size());
          s.fse = trace.per_step_error.back();
          s.wall_time_s = trace.wall_time_s;
          s.skipped_updates = trace.incidents.skipped_updates;
          s.weight_resets = trace.incidents.weight_resets;
          results[ci][static_cast<std::size_t>(i)] = s;
        }
        const int d = done.fetch_add(1) + 1;
        if (progress) progress(d, n);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  int workers = cfg.workers > 0 ? cfg.workers
                                : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  workers = std::min(workers, n);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  RunReport report;
  report.config = cfg;
  report.environment = env.name;
  report.world_w = env.width;
  report.world_h = env.height;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    CellResult cell;
    cell.spec = cells[ci];
    cell.runs = std::move(results[ci]);
    cell.row = aggregate(cell.runs, env.name, filter_name(cells[ci].filter),
                         setting_name(cells[ci].setting), cells[ci].particle_count);
    report.cells.push_back(std::move(cell));
  }
  for (int r : restarts) report.trajectory_restarts += r;
  report.timestamp = utc_timestamp();
  report.hardware_note = hardware_note();
  report.version = kArtifactVersion;
  return report;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress) {
  if (cfg.mode == "runtime") return runtime_benchmark(cfg, cfg.runtime_pairs, progress);
  const Environment env = resolve_map(cfg.map);
  std::vector<CellSpec> cells;
  for (NoiseSetting setting : cfg.settings) {
    for (FilterKind filter : cfg.filters) {
      if (filter == FilterKind::EKF) {
        cells.push_back({filter, 0, setting});
      } else {
        for (int n : cfg.particle_grid) cells.push_back({filter, n, setting});
      }
    }
  }
  return run_cells(cfg, env, cells, progress);
}

RunReport runtime_benchmark(const ExperimentConfig& cfg,
                            const std::vector<std::pair<int, int>>& pf_mkf_pairs,
                            const ProgressFn& progress) {
  if (pf_mkf_pairs.empty()) throw std::invalid_argument("runtime_benchmark: no pairs");
  const Environment env = resolve_map(cfg.map);
  const NoiseSetting setting = cfg.settings.front();
  std::vector<CellSpec> cells;
  for (const auto& [pf_n, mkf_n] : pf_mkf_pairs) {
    cells.push_back({FilterKind::PF, pf_n, setting});
    cells.push_back({FilterKind::MKF, mkf_n, setting});
  }
  return run_cells(cfg, env, cells, progress);
}

void write_report(const RunReport& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  json rows = json::array();
  for (const CellResult& cell : report.cells) {
    const AggregateRow& r = cell.row;
    rows.push_back({{"environment", r.environment},
                    {"filter", r.filter},
                    {"N", r.particle_count},
                    {"setting", r.setting},
                    {"mean_mse", r.mean_mse},
                    {"mean_fse", r.mean_fse},
                    {"std_fse", r.std_fse},
                    {"mean_time_s", r.mean_time_s},
                    {"n_runs", r.n_runs}});
  }
  json j{{"version", report.version},
         {"timestamp", report.timestamp},
         {"hardware", report.hardware_note},
         {"environment",
          {{"name", report.environment}, {"width", report.world_w}, {"height", report.world_h}}},
         {"config", json::parse(experiment_config_to_json_text(report.config))},
         {"trajectory_restarts", report.trajectory_restarts},
         {"rows", rows}};
  {
    std::ofstream out(dir / "report.json");
    if (!out) throw std::runtime_error("cannot write report.json in '" + out_dir + "'");
    out << j.dump(2) << '\n';
  }

  // results.csv excludes timing so repeated runs of one seed are
  // byte-identical; runs.csv adds the per-run wall time for plotting.
  std::ofstream results(dir / "results.csv");
  std::ofstream runs(dir / "runs.csv");
  if (!results || !runs) throw std::runtime_error("cannot write csv files in '" + out_dir + "'");
  results << "traj_id,filter,N,setting,mse,fse\n";
  runs << "traj_id,filter,N,setting,mse,fse,time_s\n";
  for (const CellResult& cell : report.cells) {
    for (const RunSummary& r : cell.runs) {
      const std::string prefix = std::to_string(r.traj_id) + ',' + filter_name(cell.spec.filter) +
                                 ',' + std::to_string(cell.spec.particle_count) + ',' +
                                 setting_name(cell.spec.setting) + ',' + csv_double(r.mse) + ',' +
                                 csv_double(r.fse);
      results << prefix << '\n';
      runs << prefix << ',' << csv_double(r.wall_time_s) << '\n';
    }
  }
  if (!results || !runs) throw std::runtime_error("failed writing csv files in '" + out_dir + "'");
}

}  // namespace symloc
