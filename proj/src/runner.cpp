#include "symloc/runner.hpp"

#include <chrono>

#include "symloc/ekf.hpp"
#include "symloc/metrics.hpp"
#include "symloc/mkf.hpp"
#include "symloc/particle.hpp"

namespace symloc {

std::string filter_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::EKF: return "ekf";
    case FilterKind::PF: return "pf";
    case FilterKind::MKF: return "mkf";
  }
  throw std::logic_error("filter_name: bad kind");
}

FilterKind filter_kind_from_name(const std::string& name) {
  if (name == "ekf" || name == "EKF") return FilterKind::EKF;
  if (name == "pf" || name == "PF") return FilterKind::PF;
  if (name == "mkf" || name == "MKF") return FilterKind::MKF;
  throw std::invalid_argument("unknown filter '" + name + "' (ekf, pf, mkf)");
}

RunTrace run_filter(FilterKind kind, const Environment& env, const Trajectory& traj,
                    const FilterConfig& cfg, Rng& rng) {
  const int t_steps = traj.steps();
  RunTrace trace;
  trace.estimates.reserve(static_cast<std::size_t>(t_steps));
  trace.per_step_error.reserve(static_cast<std::size_t>(t_steps));

  const Eigen::Matrix3d p0 =
      cfg.initial_covariance ? *cfg.initial_covariance : default_initial_covariance(env);

  using clock = std::chrono::steady_clock;
  clock::time_point t0;

  auto record = [&](const Pose& estimate, int step) {
    trace.estimates.push_back(estimate);
    trace.per_step_error.push_back(squared_distance(
        estimate.position(), traj.poses[static_cast<std::size_t>(step) + 1].position()));
  };

  switch (kind) {
    case FilterKind::EKF: {
      // The EKF cannot represent start-pose ignorance; it begins at the
      // free-space centroid under the diffuse prior.
      const Vec2 c0 = free_space_centroid(env);
      GaussianBelief b{{c0.x, c0.y, std::numbers::pi}, p0};
      t0 = clock::now();
      for (int t = 0; t < t_steps; ++t) {
        ekf_predict(b, traj.controls[static_cast<std::size_t>(t)], cfg.motion, cfg.q_samples, rng);
        if (!ekf_update(b, env, traj.measurements[static_cast<std::size_t>(t)],
                        cfg.measurement_sigma_sq))
          ++trace.incidents.skipped_updates;
        record(b.pose(), t);
      }
      break;
    }
    case FilterKind::PF: {
      ParticleSet set = pf_init(env, cfg.particle_count, rng);
      t0 = clock::now();
      for (int t = 0; t < t_steps; ++t) {
        const StepResult r = pf_step(set, env, traj.controls[static_cast<std::size_t>(t)],
                                     traj.measurements[static_cast<std::size_t>(t)], cfg, rng);
        trace.incidents.weight_resets += r.weights_reset ? 1 : 0;
        record(r.estimate, t);
      }
      break;
    }
    case FilterKind::MKF: {
      KalmanParticleSet set = mkf_init(env, cfg.particle_count, p0, rng);
      t0 = clock::now();
      for (int t = 0; t < t_steps; ++t) {
        const StepResult r = mkf_step(set, env, traj.controls[static_cast<std::size_t>(t)],
                                      traj.measurements[static_cast<std::size_t>(t)], cfg, rng);
        trace.incidents.weight_resets += r.weights_reset ? 1 : 0;
        trace.incidents.skipped_updates += r.skipped_updates;
        record(r.estimate, t);
      }
      break;
    }
  }
  trace.wall_time_s = std::chrono::duration<double>(clock::now() - t0).count();
  return trace;
}

}  // namespace symloc
