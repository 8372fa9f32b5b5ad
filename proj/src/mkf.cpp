#include "symloc/mkf.hpp"

#include <algorithm>
#include <cmath>

namespace symloc {

Eigen::Matrix3d default_initial_covariance(const Environment& env) {
  // Variance of a uniform draw over the world per axis (1/12 law) and over
  // the heading circle.
  Eigen::Matrix3d p0 = Eigen::Matrix3d::Zero();
  p0(0, 0) = env.width * env.height / 12.0;
  p0(1, 1) = env.width * env.height / 12.0;
  p0(2, 2) = two_pi * two_pi / 12.0;
  return p0;
}

KalmanParticleSet mkf_init(const Environment& env, int n, const Eigen::Matrix3d& p0, Rng& rng) {
  if (n < 1) throw std::invalid_argument("mkf_init: particle count must be >= 1");
  KalmanParticleSet set;
  set.poses.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) set.poses.push_back(sample_free_pose(env, rng));
  set.covariances.assign(static_cast<std::size_t>(n), p0);
  set.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
  return set;
}

void roughen(std::vector<Pose>& poses, const MotionNoiseModel& noise, Rng& rng) {
  for (Pose& p : poses) p = motion_step(p, {0.0, 0.0}, noise.sample(rng));
}

StepResult mkf_step(KalmanParticleSet& set, const Environment& env, const Control& c,
                    const Measurement& z_star, const FilterConfig& cfg, Rng& rng) {
  const int n = set.size();
  const int k = z_star.size();
  const bool add_noise = cfg.predicted_measurement_noise.value_or(false);
  const MeasurementNoiseModel zeta{cfg.measurement_sigma_sq};

  // One process-noise basis per step, rotated to each particle's heading.
  const ProcessNoiseBasis basis = sample_process_noise_basis(c.u, cfg.motion, cfg.q_samples, rng);

  std::vector<double> sorted_z = z_star.distances;
  std::sort(sorted_z.begin(), sorted_z.end());

  StepResult result;
  std::vector<double> log_weights(static_cast<std::size_t>(n));
  std::vector<std::pair<int, double>> nearest;
  Eigen::VectorXd residual(k);
  for (int i = 0; i < n; ++i) {
    GaussianBelief b{{set.poses[static_cast<std::size_t>(i)].x,
                      set.poses[static_cast<std::size_t>(i)].y,
                      set.poses[static_cast<std::size_t>(i)].phi},
                     set.covariances[static_cast<std::size_t>(i)]};
    ekf_predict_with_basis(b, c, basis);
    if (k > 0 && !ekf_update(b, env, z_star, cfg.measurement_sigma_sq)) ++result.skipped_updates;

    double log_lik = 0.0;
    if (k > 0) {
      // Weight by the measurement likelihood at the posterior mean, each
      // hypothesis predicting against its own nearest beacons.
      k_nearest_beacons(env, {b.mean(0), b.mean(1)}, k, nearest);
      for (int j = 0; j < k; ++j) {
        double predicted = nearest[static_cast<std::size_t>(j)].second;
        if (add_noise) predicted += zeta.sample(rng);
        residual(j) = sorted_z[static_cast<std::size_t>(j)] - predicted;
      }
      log_lik = log_likelihood_isotropic(residual, cfg.measurement_sigma_sq);
    }
    log_weights[static_cast<std::size_t>(i)] =
        std::log(set.weights[static_cast<std::size_t>(i)]) + log_lik;

    set.poses[static_cast<std::size_t>(i)] = b.pose();
    set.covariances[static_cast<std::size_t>(i)] = b.cov;
  }

  result.weights_reset = normalize_log_weights(log_weights, set.weights);
  result.estimate = weighted_mean_pose(set.poses, set.weights);
  result.n_eff = effective_sample_size(set.weights);

  if (should_resample(cfg, result.n_eff, n)) {
    const std::vector<int> idx = multinomial_sample_indices(set.weights, n, rng);
    reorder(set.poses, idx);
    reorder(set.covariances, idx);
    std::fill(set.weights.begin(), set.weights.end(), 1.0 / n);
    result.resampled = true;
    if (cfg.roughen) roughen(set.poses, cfg.motion, rng);
  }
  return result;
}

}  // namespace symloc
