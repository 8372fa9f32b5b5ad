#ifndef SYMLOC_FILTER_CONFIG_HPP
#define SYMLOC_FILTER_CONFIG_HPP

#include <Eigen/Dense>
#include <optional>

#include "symloc/models.hpp"

namespace symloc {

/// Knobs shared by the particle-based filters (and the EKF, which uses the
/// subset that applies to it).
struct FilterConfig {
  int particle_count = 100;
  int k_measure = 5;

  /// The filter's Gaussian motion-noise assumption (covariance M).
  MotionNoiseModel motion{};

  /// Variance of the assumed range noise (isotropic R = sigma^2 I). The
  /// default is twice the simulator's 0.01, matching the benchmark setup.
  double measurement_sigma_sq = 0.02;

  /// Initial covariance for Kalman-type filters; when absent, a diffuse
  /// default derived from the world size is used.
  std::optional<Eigen::Matrix3d> initial_covariance;

  /// Monte-Carlo draws used to estimate the process covariance per step.
  int q_samples = 64;

  /// Resampling policy: every step (default), or only when the effective
  /// sample size drops to `neff_threshold_fraction * N`.
  bool resample_every_step = true;
  double neff_threshold_fraction = 0.5;

  /// Add a noise draw to each particle's predicted distances before the
  /// likelihood. Unset = per-filter default: true for the PF, false for
  /// the MKF.
  std::optional<bool> predicted_measurement_noise;

  /// Perturb resampled states (MKF only). Disable to make an N=1 MKF
  /// coincide exactly with the EKF.
  bool roughen = true;
};

}  // namespace symloc

#endif
