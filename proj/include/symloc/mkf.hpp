#ifndef SYMLOC_MKF_HPP
#define SYMLOC_MKF_HPP

#include <Eigen/Dense>
#include <vector>

#include "symloc/ekf.hpp"
#include "symloc/environment.hpp"
#include "symloc/filter_config.hpp"
#include "symloc/particle.hpp"

namespace symloc {

/// Particle bank where every hypothesis carries its own Gaussian covariance.
struct KalmanParticleSet {
  std::vector<Pose> poses;
  std::vector<Eigen::Matrix3d> covariances;
  std::vector<double> weights;  // normalized

  int size() const { return static_cast<int>(poses.size()); }
};

/// Diffuse prior for a w x h world: diag(wh/12, wh/12, (2*pi)^2/12), the
/// variance scale of a uniform draw over the world and the circle.
Eigen::Matrix3d default_initial_covariance(const Environment& env);

KalmanParticleSet mkf_init(const Environment& env, int n, const Eigen::Matrix3d& p0, Rng& rng);

/// Perturb each pose by a zero-control motion step with noise drawn from
/// `noise` (diversity restoration after resampling). Weights/covariances of
/// the owning set are untouched.
void roughen(std::vector<Pose>& poses, const MotionNoiseModel& noise, Rng& rng);

/// One multiparticle-Kalman step: every particle runs an EKF predict/update
/// (one process-noise basis is sampled per step and rotated to each
/// particle's heading), weights multiply the likelihood of the measurement
/// at the particle's posterior mean, estimate is the weighted mean before
/// resampling, then states and covariances are resampled jointly and the
/// resampled states are roughened.
StepResult mkf_step(KalmanParticleSet& set, const Environment& env, const Control& c,
                    const Measurement& z_star, const FilterConfig& cfg, Rng& rng);

}  // namespace symloc

#endif
