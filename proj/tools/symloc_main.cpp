#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symloc/bench.hpp"
#include "symloc/map_io.hpp"
#include "symloc/presets.hpp"
#include "symloc/trajectory.hpp"

namespace {

using namespace symloc;

struct GenMapArgs {
  std::string preset;
  bool nonsymmetric = false;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen_map(const GenMapArgs& a) {
  const std::string name = a.nonsymmetric ? "n-" + a.preset : a.preset;
  const Environment env = preset_environment(name, a.seed);
  save_map(env, a.out);
  std::cerr << "gen-map: wrote '" << a.out << "' (" << env.beacons.size() << " beacons, "
            << env.obstacles.size() << " obstacles)\n";
}

struct SimulateArgs {
  std::string map;
  int steps = 100;
  int n_traj = 1;
  std::uint64_t seed = 0;
  int k_measure = 5;
  double speed_min = 0.0;
  double speed_max = 0.5;
  std::string out;
};

void run_simulate(const SimulateArgs& a) {
  const Environment env = resolve_map(a.map);
  TrajectoryParams params;
  params.steps = a.steps;
  params.k_measure = a.k_measure;
  params.speed_min = a.speed_min;
  params.speed_max = a.speed_max;
  std::filesystem::create_directories(a.out);
  for (int i = 0; i < a.n_traj; ++i) {
    const Trajectory traj = generate_trajectory(env, params, derive_seed(a.seed, i + 1, 0));
    char name[64];
    std::snprintf(name, sizeof name, "traj_%06d.csv", i);
    save_trajectory(traj, (std::filesystem::path(a.out) / name).string());
  }
  std::cerr << "simulate: wrote " << a.n_traj << " trajectories to '" << a.out << "'\n";
}

struct BenchArgs {
  std::string config;
  std::string out;
  int workers = -1;  // -1: not given on the command line
};

void run_bench(const BenchArgs& a) {
  ExperimentConfig cfg = load_experiment_config(a.config);
  if (a.workers >= 0) {
    cfg.workers = a.workers;
  } else if (const char* env_workers = std::getenv("SYMLOC_WORKERS")) {
    try {
      cfg.workers = std::stoi(env_workers);
    } catch (const std::exception&) {
      throw std::runtime_error("SYMLOC_WORKERS is not an integer: '" + std::string(env_workers) +
                               "'");
    }
  }
  const int total = cfg.n_trajectories;
  const int stride = std::max(1, total / 20);
  auto progress = [&](int done, int n) {
    if (done % stride == 0 || done == n)
      std::fprintf(stderr, "bench: %d/%d trajectories\n", done, n);
  };
  const RunReport report = run_experiment(cfg, progress);
  write_report(report, a.out);
  std::cerr << "bench: wrote report.json, results.csv, runs.csv to '" << a.out << "'\n";
}

struct ReportArgs {
  std::string results;
  std::string format = "table";
};

void run_report(const ReportArgs& a) {
  const std::filesystem::path path = std::filesystem::path(a.results) / "report.json";
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("no report.json in '" + a.results + "' (run `symloc bench` first)");
  std::stringstream buf;
  buf << in.rdbuf();
  if (a.format == "table")
    std::cout << render_report_tables(buf.str());
  else
    std::cout << render_report_csv(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar object localization: maps, trajectory simulation, filter benchmarks"};
  app.require_subcommand(1);

  GenMapArgs gen_map;
  CLI::App* cmd_gen = app.add_subcommand("gen-map", "Write a built-in map to a file");
  cmd_gen->add_option("--preset", gen_map.preset, "world10, World18, WORLD27 or labyrinth")
      ->required();
  cmd_gen->add_flag("--nonsymmetric", gen_map.nonsymmetric, "Remove one tile's contents");
  cmd_gen->add_option("--seed", gen_map.seed, "Generation seed (labyrinth only)");
  cmd_gen->add_option("--out", gen_map.out, "Output map path")->required();
  cmd_gen->callback([&] { run_gen_map(gen_map); });

  SimulateArgs simulate;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "Generate ground-truth trajectories");
  cmd_sim->add_option("--map", simulate.map, "Map file or preset name")->required();
  cmd_sim->add_option("--T,--steps", simulate.steps, "Steps per trajectory")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--n-traj", simulate.n_traj, "Number of trajectories")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--seed", simulate.seed, "Master seed");
  cmd_sim->add_option("--k", simulate.k_measure, "Beacons per measurement")
      ->check(CLI::PositiveNumber);
  cmd_sim->add_option("--speed-min", simulate.speed_min, "Commanded speed lower bound");
  cmd_sim->add_option("--speed-max", simulate.speed_max, "Commanded speed upper bound");
  cmd_sim->add_option("--out", simulate.out, "Output directory")->required();
  cmd_sim->callback([&] { run_simulate(simulate); });

  BenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "Run a filter-comparison experiment");
  cmd_bench->add_option("--config", bench.config, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_bench->add_option("--out", bench.out, "Output directory")->required();
  cmd_bench->add_option("--workers", bench.workers,
                        "Worker threads (overrides SYMLOC_WORKERS and the config)");
  cmd_bench->callback([&] { run_bench(bench); });

  ReportArgs report;
  CLI::App* cmd_report = app.add_subcommand("report", "Render benchmark results");
  cmd_report->add_option("--results", report.results, "Directory written by bench")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd_report->add_option("--format", report.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  cmd_report->callback([&] { run_report(report); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage diagnostic
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
