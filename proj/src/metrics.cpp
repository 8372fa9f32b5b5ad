#include "symloc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symloc {

double mse(const std::vector<Pose>& estimates, const std::vector<Pose>& truths) {
  if (estimates.size() != truths.size() || estimates.empty())
    throw std::invalid_argument("mse: sequences must be non-empty and equal length");
  double sum = 0.0;
  for (std::size_t t = 0; t < estimates.size(); ++t)
    sum += squared_distance(estimates[t].position(), truths[t].position());
  return sum / static_cast<double>(estimates.size());
}

double fse(const Pose& estimate, const Pose& truth) {
  return squared_distance(estimate.position(), truth.position());
}

double mse_random_threshold(double w, double h) {
  if (w <= 0.0 || h <= 0.0) throw std::invalid_argument("mse_random_threshold: bad dimensions");
  return (w * w + h * h) / 6.0;
}

double symmetry_aware_fse(const Pose& estimate, const Pose& truth, const SymmetrySpec& spec) {
  spec.validate();
  const double w = spec.world_w();
  const double h = spec.world_h();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < spec.tiles_y; ++j) {
    for (int i = 0; i < spec.tiles_x; ++i) {
      // Shift the truth by a tile vector, wrapping around the world.
      const double tx = std::fmod(truth.x + i * spec.tile_w, w);
      const double ty = std::fmod(truth.y + j * spec.tile_h, h);
      best = std::min(best, squared_distance(estimate.position(), {tx, ty}));
    }
  }
  return best;
}

AggregateRow aggregate(const std::vector<RunSummary>& runs, const std::string& environment,
                       const std::string& filter, const std::string& setting, int particle_count) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  AggregateRow row;
  row.environment = environment;
  row.filter = filter;
  row.setting = setting;
  row.particle_count = particle_count;
  row.n_runs = static_cast<int>(runs.size());
  for (const RunSummary& r : runs) {
    row.mean_mse += r.mse;
    row.mean_fse += r.fse;
    row.mean_time_s += r.wall_time_s;
  }
  row.mean_mse /= row.n_runs;
  row.mean_fse /= row.n_runs;
  row.mean_time_s /= row.n_runs;
  if (row.n_runs > 1) {
    double ss = 0.0;
    for (const RunSummary& r : runs) ss += (r.fse - row.mean_fse) * (r.fse - row.mean_fse);
    row.std_fse = std::sqrt(ss / (row.n_runs - 1));
  }
  return row;
}

}  // namespace symloc
