#ifndef SYMLOC_TRAJECTORY_HPP
#define SYMLOC_TRAJECTORY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symloc/environment.hpp"
#include "symloc/models.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"

namespace symloc {

struct TrajectoryParams {
  int steps = 100;
  double speed_min = 0.0;
  double speed_max = 0.5;
  int k_measure = 5;
  MeasurementNoiseModel measurement{0.01};
  MotionNoiseModel truth_noise{0.02, 0.01 * two_pi, NoiseDraw::Uniform};
  int max_heading_attempts = 100;
  int max_restarts = 50;
};

/// Ground truth for one run: T+1 poses, the T commanded controls the filters
/// see (no noise terms), and the T noisy range measurements taken after each
/// move. measurements[t] is sensed at poses[t+1].
struct Trajectory {
  std::vector<Pose> poses;
  std::vector<Control> controls;
  std::vector<Measurement> measurements;
  std::uint64_t seed = 0;
  int restarts = 0;  // rejected attempts before this trajectory succeeded

  int steps() const { return static_cast<int>(controls.size()); }
};

/// Random-walk generation: start pose uniform over free space, speed drawn
/// once per trajectory, commanded heading change 0 unless the swept segment
/// would collide, in which case it is redrawn uniformly (the applied motion
/// adds truth noise and is re-checked). A start with no escape within the
/// attempt budget restarts the trajectory. Fully determined by
/// (env, params, seed).
Trajectory generate_trajectory(const Environment& env, const TrajectoryParams& params,
                               std::uint64_t seed);

/// Delimited text, one row per step t = 1..T:
///   t, x, y, phi, u, dphi, k beacon indices, k distances
/// with the start pose and seed carried in leading '#' comment lines.
void save_trajectory(const Trajectory& traj, const std::string& path);
Trajectory load_trajectory(const std::string& path);

}  // namespace symloc

#endif
