#include "symloc/particle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symloc {

ParticleSet pf_init(const Environment& env, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("pf_init: particle count must be >= 1");
  ParticleSet set;
  set.poses.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) set.poses.push_back(sample_free_pose(env, rng));
  set.weights.assign(static_cast<std::size_t>(n), 1.0 / n);
  return set;
}

int effective_sample_size(const std::vector<double>& weights) {
  double sum_sq = 0.0;
  for (double w : weights) sum_sq += w * w;
  if (sum_sq <= 0.0) return 1;
  const int n = static_cast<int>(weights.size());
  const int n_eff = static_cast<int>(std::floor(1.0 / sum_sq));
  return std::clamp(n_eff, 1, n);
}

bool normalize_log_weights(const std::vector<double>& log_weights, std::vector<double>& weights) {
  const std::size_t n = log_weights.size();
  weights.resize(n);
  double max_log = -std::numeric_limits<double>::infinity();
  for (double lw : log_weights)
    if (lw > max_log) max_log = lw;
  if (!std::isfinite(max_log)) {
    // Every particle underflowed (or went NaN): restart from ignorance.
    std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(n));
    return true;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = std::exp(log_weights[i] - max_log);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return false;
}

Pose weighted_mean_pose(const std::vector<Pose>& poses, const std::vector<double>& weights) {
  if (poses.empty() || poses.size() != weights.size())
    throw std::invalid_argument("weighted_mean_pose: size mismatch");
  if (poses.size() == 1) return poses[0];  // exact; skips the trig round-trip
  double x = 0.0;
  double y = 0.0;
  double sin_sum = 0.0;
  double cos_sum = 0.0;
  for (std::size_t i = 0; i < poses.size(); ++i) {
    x += weights[i] * poses[i].x;
    y += weights[i] * poses[i].y;
    sin_sum += weights[i] * std::sin(poses[i].phi);
    cos_sum += weights[i] * std::cos(poses[i].phi);
  }
  return {x, y, wrap_angle(std::atan2(sin_sum, cos_sum))};
}

std::vector<int> multinomial_sample_indices(const std::vector<double>& weights, int n, Rng& rng) {
  const std::size_t m = weights.size();
  if (m == 0) throw std::invalid_argument("multinomial_sample_indices: empty weights");
  std::vector<double> cdf(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    acc += weights[i];
    cdf[i] = acc;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = unit(rng) * acc;  // scale guards a sum slightly off 1
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    idx[static_cast<std::size_t>(j)] =
        static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(m) - 1));
  }
  return idx;
}

bool should_resample(const FilterConfig& cfg, int n_eff, int n) {
  if (n <= 1) return false;
  if (cfg.resample_every_step) return true;
  return n_eff <= cfg.neff_threshold_fraction * n;
}

StepResult pf_step(ParticleSet& set, const Environment& env, const Control& c,
                   const Measurement& z_star, const FilterConfig& cfg, Rng& rng) {
  const int n = set.size();
  const int k = z_star.size();
  const bool add_noise = cfg.predicted_measurement_noise.value_or(true);
  const MeasurementNoiseModel zeta{cfg.measurement_sigma_sq};

  std::vector<double> sorted_z = z_star.distances;
  std::sort(sorted_z.begin(), sorted_z.end());

  std::vector<double> log_weights(static_cast<std::size_t>(n));
  std::vector<std::pair<int, double>> nearest;
  Eigen::VectorXd residual(k);
  for (int i = 0; i < n; ++i) {
    Pose& p = set.poses[static_cast<std::size_t>(i)];
    p = motion_step(p, c, cfg.motion.sample(rng));
    double log_lik = 0.0;
    if (k > 0) {
      k_nearest_beacons(env, p.position(), k, nearest);
      for (int j = 0; j < k; ++j) {
        double predicted = nearest[static_cast<std::size_t>(j)].second;
        if (add_noise) predicted += zeta.sample(rng);
        residual(j) = sorted_z[static_cast<std::size_t>(j)] - predicted;
      }
      log_lik = log_likelihood_isotropic(residual, cfg.measurement_sigma_sq);
    }
    log_weights[static_cast<std::size_t>(i)] =
        std::log(set.weights[static_cast<std::size_t>(i)]) + log_lik;
  }

  StepResult result;
  result.weights_reset = normalize_log_weights(log_weights, set.weights);
  result.estimate = weighted_mean_pose(set.poses, set.weights);
  result.n_eff = effective_sample_size(set.weights);

  if (should_resample(cfg, result.n_eff, n)) {
    const std::vector<int> idx = multinomial_sample_indices(set.weights, n, rng);
    reorder(set.poses, idx);
    std::fill(set.weights.begin(), set.weights.end(), 1.0 / n);
    result.resampled = true;
  }
  return result;
}

}  // namespace symloc
