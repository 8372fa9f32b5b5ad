#ifndef SYMLOC_METRICS_HPP
#define SYMLOC_METRICS_HPP

#include <string>
#include <vector>

#include "symloc/environment.hpp"
#include "symloc/pose.hpp"

namespace symloc {

/// Mean squared position error across two aligned pose sequences. Heading is
/// excluded from all losses here.
double mse(const std::vector<Pose>& estimates, const std::vector<Pose>& truths);

/// Squared position error of the final state.
double fse(const Pose& estimate, const Pose& truth);

/// Expected squared distance between two independent uniform points in an
/// obstacle-free w x h world: (w^2 + h^2) / 6. Estimators above this level
/// do no better than guessing.
double mse_random_threshold(double w, double h);

/// Final-state error up to the world's tile-translation symmetry group:
/// min over all tile shifts (applied to the truth position, wrapping around
/// the world) of the squared distance to the estimate.
double symmetry_aware_fse(const Pose& estimate, const Pose& truth, const SymmetrySpec& spec);

/// Per-run numbers entering a benchmark cell.
struct RunSummary {
  int traj_id = 0;
  double mse = 0.0;
  double fse = 0.0;
  double wall_time_s = 0.0;
  int skipped_updates = 0;
  int weight_resets = 0;
};

/// One row of the comparison tables: a (environment, filter, N, noise
/// setting) cell aggregated over runs.
struct AggregateRow {
  std::string environment;
  std::string filter;
  std::string setting;
  int particle_count = 0;  // 0 for the EKF
  double mean_mse = 0.0;
  double mean_fse = 0.0;
  double std_fse = 0.0;  // unbiased; 0 when n_runs == 1
  double mean_time_s = 0.0;
  int n_runs = 0;
};

/// Mean/std over the runs of one cell. Works shard-wise: aggregating a
/// concatenation equals aggregating the parts together.
AggregateRow aggregate(const std::vector<RunSummary>& runs, const std::string& environment,
                       const std::string& filter, const std::string& setting, int particle_count);

}  // namespace symloc

#endif
