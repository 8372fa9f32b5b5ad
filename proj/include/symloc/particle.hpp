#ifndef SYMLOC_PARTICLE_HPP
#define SYMLOC_PARTICLE_HPP

#include <vector>

#include "symloc/environment.hpp"
#include "symloc/filter_config.hpp"
#include "symloc/models.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"

namespace symloc {

struct ParticleSet {
  std::vector<Pose> poses;
  std::vector<double> weights;  // normalized

  int size() const { return static_cast<int>(poses.size()); }
};

/// Diagnostics of one filter step.
struct StepResult {
  Pose estimate;
  int n_eff = 0;
  bool resampled = false;
  bool weights_reset = false;   // every likelihood underflowed
  int skipped_updates = 0;      // per-particle Kalman updates skipped
};

/// Particles uniform over free space, weights uniform.
ParticleSet pf_init(const Environment& env, int n, Rng& rng);

/// floor(1 / sum w_i^2), clamped to [1, N].
int effective_sample_size(const std::vector<double>& weights);

/// Exponentiate-and-normalize log weights into `weights` (max-subtraction
/// for stability). When every entry is -inf/NaN the weights are reset to
/// uniform; returns true in that case.
bool normalize_log_weights(const std::vector<double>& log_weights, std::vector<double>& weights);

/// Sum of w_i * pose_i with the heading averaged circularly:
/// atan2(sum w sin phi, sum w cos phi), wrapped to [0, 2*pi).
Pose weighted_mean_pose(const std::vector<Pose>& poses, const std::vector<double>& weights);

/// n i.i.d. categorical draws proportional to `weights` (stochastic
/// resampling). Ascending cumulative-sum lookup, one uniform per draw.
std::vector<int> multinomial_sample_indices(const std::vector<double>& weights, int n, Rng& rng);

/// v <- v[idx] elementwise; used to reorder particle state arrays (and, for
/// the Kalman variant, covariances) with one shared ancestry.
template <class T>
void reorder(std::vector<T>& v, const std::vector<int>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(v[static_cast<std::size_t>(i)]);
  v = std::move(out);
}

/// Whether this step resamples: always, or on effective-sample-size decay,
/// per the config. A single particle is never resampled (identity).
bool should_resample(const FilterConfig& cfg, int n_eff, int n);

/// One bootstrap particle-filter step: propagate every particle with sampled
/// motion noise, reweight by the range likelihood (each particle predicts
/// against its own nearest beacons, distances matched in ascending order),
/// estimate, then resample per policy. The estimate uses the post-update
/// weights, before resampling.
StepResult pf_step(ParticleSet& set, const Environment& env, const Control& c,
                   const Measurement& z_star, const FilterConfig& cfg, Rng& rng);

}  // namespace symloc

#endif
