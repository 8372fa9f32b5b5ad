#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symloc/bench.hpp"
#include "symloc/ekf.hpp"
#include "symloc/map_io.hpp"
#include "symloc/metrics.hpp"
#include "symloc/mkf.hpp"
#include "symloc/particle.hpp"
#include "symloc/presets.hpp"
#include "symloc/runner.hpp"
#include "symloc/trajectory.hpp"

namespace py = pybind11;
using namespace symloc;

namespace {

/// Deterministic generator stream keyed by (master, a, b); python-side
/// handle for every operation that consumes randomness.
struct RandomStream {
  Rng rng;
  explicit RandomStream(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0)
      : rng(make_stream(master, a, b)) {}
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar object localization: environments, filters, benchmarks";

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", [](const Vec2& v) {
        return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
      });

  py::class_<Rect>(m, "Rect")
      .def(py::init<double, double, double, double>(), py::arg("x_min") = 0.0,
           py::arg("y_min") = 0.0, py::arg("x_max") = 0.0, py::arg("y_max") = 0.0)
      .def_readwrite("x_min", &Rect::x_min)
      .def_readwrite("y_min", &Rect::y_min)
      .def_readwrite("x_max", &Rect::x_max)
      .def_readwrite("y_max", &Rect::y_max)
      .def("area", &Rect::area);

  py::class_<Pose>(m, "Pose")
      .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("phi") = 0.0)
      .def_readwrite("x", &Pose::x)
      .def_readwrite("y", &Pose::y)
      .def_readwrite("phi", &Pose::phi)
      .def("__repr__", [](const Pose& p) {
        return "Pose(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
               std::to_string(p.phi) + ")";
      });

  py::class_<Control>(m, "Control")
      .def(py::init<double, double>(), py::arg("u") = 0.0, py::arg("dphi") = 0.0)
      .def_readwrite("u", &Control::u)
      .def_readwrite("dphi", &Control::dphi);

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("master"),
           py::arg("a") = 0, py::arg("b") = 0);

  py::class_<SymmetrySpec>(m, "SymmetrySpec")
      .def(py::init<>())
      .def_readwrite("tiles_x", &SymmetrySpec::tiles_x)
      .def_readwrite("tiles_y", &SymmetrySpec::tiles_y)
      .def_readwrite("tile_w", &SymmetrySpec::tile_w)
      .def_readwrite("tile_h", &SymmetrySpec::tile_h)
      .def_readwrite("tile_obstacles", &SymmetrySpec::tile_obstacles)
      .def_readwrite("tile_beacons", &SymmetrySpec::tile_beacons);

  py::class_<Environment>(m, "Environment")
      .def(py::init<>())
      .def_readwrite("name", &Environment::name)
      .def_readwrite("width", &Environment::width)
      .def_readwrite("height", &Environment::height)
      .def_readwrite("obstacles", &Environment::obstacles)
      .def_readwrite("beacons", &Environment::beacons)
      .def_readonly("symmetry", &Environment::symmetry)
      .def("validate", &Environment::validate)
      .def("__repr__", [](const Environment& e) {
        return "Environment('" + e.name + "', " + std::to_string(e.width) + "x" +
               std::to_string(e.height) + ", " + std::to_string(e.beacons.size()) + " beacons)";
      });

  m.def("load_map", &load_map, py::arg("path"));
  m.def("save_map", &save_map, py::arg("env"), py::arg("path"));
  m.def("preset_environment", &preset_environment, py::arg("name"), py::arg("seed") = 0);
  m.def("preset_names", &preset_names);
  m.def("generate_labyrinth", &generate_labyrinth, py::arg("seed"), py::arg("cells_per_side") = 8,
        py::arg("beacon_count") = 16);
  m.def("make_nonsymmetric", &make_nonsymmetric, py::arg("env"), py::arg("tile_index"));
  m.def("generate_symmetric_world", &generate_symmetric_world, py::arg("spec"), py::arg("name"));
  m.def("collides", &collides, py::arg("env"), py::arg("p"));
  m.def("segment_collides", &segment_collides, py::arg("env"), py::arg("a"), py::arg("b"));
  m.def(
      "k_nearest_beacons",
      [](const Environment& env, const Vec2& p, int k) { return k_nearest_beacons(env, p, k); },
      py::arg("env"), py::arg("p"), py::arg("k"));
  m.def(
      "sample_free_pose",
      [](const Environment& env, RandomStream& rng) { return sample_free_pose(env, rng.rng); },
      py::arg("env"), py::arg("rng"));
  m.def("free_area", &free_area, py::arg("env"));

  py::class_<Measurement>(m, "Measurement")
      .def(py::init<>())
      .def_readwrite("beacon_indices", &Measurement::beacon_indices)
      .def_readwrite("distances", &Measurement::distances);

  py::class_<MotionNoiseModel>(m, "MotionNoiseModel")
      .def(py::init<>())
      .def_readwrite("sigma_r", &MotionNoiseModel::sigma_r)
      .def_readwrite("sigma_phi", &MotionNoiseModel::sigma_phi);

  py::class_<FilterConfig>(m, "FilterConfig")
      .def(py::init<>())
      .def_readwrite("particle_count", &FilterConfig::particle_count)
      .def_readwrite("k_measure", &FilterConfig::k_measure)
      .def_readwrite("motion", &FilterConfig::motion)
      .def_readwrite("measurement_sigma_sq", &FilterConfig::measurement_sigma_sq)
      .def_readwrite("q_samples", &FilterConfig::q_samples)
      .def_readwrite("resample_every_step", &FilterConfig::resample_every_step)
      .def_readwrite("neff_threshold_fraction", &FilterConfig::neff_threshold_fraction)
      .def_readwrite("predicted_measurement_noise", &FilterConfig::predicted_measurement_noise)
      .def_readwrite("roughen", &FilterConfig::roughen);

  py::class_<TrajectoryParams>(m, "TrajectoryParams")
      .def(py::init<>())
      .def_readwrite("steps", &TrajectoryParams::steps)
      .def_readwrite("speed_min", &TrajectoryParams::speed_min)
      .def_readwrite("speed_max", &TrajectoryParams::speed_max)
      .def_readwrite("k_measure", &TrajectoryParams::k_measure);

  py::class_<Trajectory>(m, "Trajectory")
      .def(py::init<>())
      .def_readwrite("poses", &Trajectory::poses)
      .def_readwrite("controls", &Trajectory::controls)
      .def_readwrite("measurements", &Trajectory::measurements)
      .def_readwrite("seed", &Trajectory::seed)
      .def_readwrite("restarts", &Trajectory::restarts)
      .def("steps", &Trajectory::steps);

  m.def("generate_trajectory", &generate_trajectory, py::arg("env"), py::arg("params"),
        py::arg("seed"));
  m.def("save_trajectory", &save_trajectory, py::arg("traj"), py::arg("path"));
  m.def("load_trajectory", &load_trajectory, py::arg("path"));

  py::class_<Incidents>(m, "Incidents")
      .def_readonly("skipped_updates", &Incidents::skipped_updates)
      .def_readonly("weight_resets", &Incidents::weight_resets);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("estimates", &RunTrace::estimates)
      .def_readonly("per_step_error", &RunTrace::per_step_error)
      .def_readonly("wall_time_s", &RunTrace::wall_time_s)
      .def_readonly("incidents", &RunTrace::incidents);

  m.def(
      "run_filter",
      [](const std::string& kind, const Environment& env, const Trajectory& traj,
         const FilterConfig& cfg, RandomStream& rng) {
        return run_filter(filter_kind_from_name(kind), env, traj, cfg, rng.rng);
      },
      py::arg("kind"), py::arg("env"), py::arg("traj"), py::arg("cfg"), py::arg("rng"),
      "Run 'ekf', 'pf' or 'mkf' over a recorded trajectory.");

  m.def("mse", &mse, py::arg("estimates"), py::arg("truths"));
  m.def("fse", &fse, py::arg("estimate"), py::arg("truth"));
  m.def("mse_random_threshold", &mse_random_threshold, py::arg("w"), py::arg("h"));
  m.def("symmetry_aware_fse", &symmetry_aware_fse, py::arg("estimate"), py::arg("truth"),
        py::arg("spec"));

  py::class_<AggregateRow>(m, "AggregateRow")
      .def_readonly("environment", &AggregateRow::environment)
      .def_readonly("filter", &AggregateRow::filter)
      .def_readonly("setting", &AggregateRow::setting)
      .def_readonly("particle_count", &AggregateRow::particle_count)
      .def_readonly("mean_mse", &AggregateRow::mean_mse)
      .def_readonly("mean_fse", &AggregateRow::mean_fse)
      .def_readonly("std_fse", &AggregateRow::std_fse)
      .def_readonly("mean_time_s", &AggregateRow::mean_time_s)
      .def_readonly("n_runs", &AggregateRow::n_runs);

  py::class_<CellResult>(m, "CellResult").def_readonly("row", &CellResult::row);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("environment", &RunReport::environment)
      .def_readonly("cells", &RunReport::cells)
      .def_readonly("trajectory_restarts", &RunReport::trajectory_restarts)
      .def_readonly("timestamp", &RunReport::timestamp);

  m.def("experiment_config_from_json", &experiment_config_from_json_text, py::arg("text"));
  m.def("load_experiment_config", &load_experiment_config, py::arg("path"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("map", &ExperimentConfig::map)
      .def_readwrite("particle_grid", &ExperimentConfig::particle_grid)
      .def_readwrite("n_trajectories", &ExperimentConfig::n_trajectories)
      .def_readwrite("steps", &ExperimentConfig::steps)
      .def_readwrite("k_measure", &ExperimentConfig::k_measure)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("workers", &ExperimentConfig::workers)
      .def_property(
          "filters",
          [](const ExperimentConfig& c) {
            std::vector<std::string> out;
            for (FilterKind f : c.filters) out.push_back(filter_name(f));
            return out;
          },
          [](ExperimentConfig& c, const std::vector<std::string>& names) {
            c.filters.clear();
            for (const std::string& n : names) c.filters.push_back(filter_kind_from_name(n));
          })
      .def_property(
          "settings",
          [](const ExperimentConfig& c) {
            std::vector<std::string> out;
            for (NoiseSetting s : c.settings) out.push_back(setting_name(s));
            return out;
          },
          [](ExperimentConfig& c, const std::vector<std::string>& names) {
            c.settings.clear();
            for (const std::string& n : names) c.settings.push_back(setting_from_name(n));
          });

  m.def(
      "run_experiment",
      [](const ExperimentConfig& cfg) { return run_experiment(cfg); },
      py::arg("cfg"), py::call_guard<py::gil_scoped_release>());
  m.def("write_report", &write_report, py::arg("report"), py::arg("out_dir"));
}
