#ifndef SYMLOC_RUNNER_HPP
#define SYMLOC_RUNNER_HPP

#include <string>
#include <vector>

#include "symloc/environment.hpp"
#include "symloc/filter_config.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"
#include "symloc/trajectory.hpp"

namespace symloc {

enum class FilterKind { EKF, PF, MKF };

std::string filter_name(FilterKind kind);
FilterKind filter_kind_from_name(const std::string& name);

struct Incidents {
  int skipped_updates = 0;
  int weight_resets = 0;
};

/// Closed-loop record of one filter over one trajectory. estimates[t]
/// estimates the pose after control t; per_step_error is the squared
/// position error of each estimate. Wall time covers the filter loop only.
struct RunTrace {
  std::vector<Pose> estimates;
  std::vector<double> per_step_error;
  double wall_time_s = 0.0;
  Incidents incidents;
};

/// Run one filter over a recorded trajectory. The filter starts with no
/// knowledge of the true pose: particle filters initialize uniformly over
/// free space; the EKF starts at the free-space centroid under the diffuse
/// default covariance. Filter-step failures are recorded as incidents, never
/// thrown.
RunTrace run_filter(FilterKind kind, const Environment& env, const Trajectory& traj,
                    const FilterConfig& cfg, Rng& rng);

}  // namespace symloc

#endif
