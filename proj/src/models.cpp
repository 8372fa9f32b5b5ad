#include "symloc/models.hpp"

#include <cmath>

namespace symloc {

namespace {

double draw_symmetric(double sigma, NoiseDraw mode, Rng& rng) {
  if (sigma == 0.0) return 0.0;
  if (mode == NoiseDraw::Uniform) return std::uniform_real_distribution<double>(-sigma, sigma)(rng);
  return std::normal_distribution<double>(0.0, sigma)(rng);
}

}  // namespace

MotionNoise MotionNoiseModel::sample(Rng& rng) const {
  MotionNoise n;
  n.eta_r = draw_symmetric(sigma_r, draw, rng);
  n.eta_phi = draw_symmetric(sigma_phi, draw, rng);
  return n;
}

Eigen::Matrix2d MotionNoiseModel::covariance() const {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = sigma_r * sigma_r;
  m(1, 1) = sigma_phi * sigma_phi;
  return m;
}

Pose motion_step(const Pose& p, const Control& c, const MotionNoise& n) {
  const double heading = p.phi + c.dphi + n.eta_phi;
  const double step = c.u + n.eta_r;
  return {p.x + step * std::cos(heading), p.y + step * std::sin(heading), wrap_angle(heading)};
}

Eigen::Matrix3d motion_jacobian(const Pose& p, const Control& c) {
  const double heading = p.phi + c.dphi;
  Eigen::Matrix3d f = Eigen::Matrix3d::Identity();
  f(0, 2) = -c.u * std::sin(heading);
  f(1, 2) = c.u * std::cos(heading);
  return f;
}

double MeasurementNoiseModel::sample(Rng& rng) const {
  if (sigma_sq == 0.0) return 0.0;
  return std::normal_distribution<double>(0.0, std::sqrt(sigma_sq))(rng);
}

Measurement measure(const Environment& env, const Vec2& p, int k,
                    const MeasurementNoiseModel& noise, Rng& rng) {
  Measurement z;
  const auto nearest = k_nearest_beacons(env, p, k);
  z.beacon_indices.reserve(nearest.size());
  z.distances.reserve(nearest.size());
  for (const auto& [idx, dist] : nearest) {
    z.beacon_indices.push_back(idx);
    z.distances.push_back(dist + noise.sample(rng));
  }
  return z;
}

void predict_distances(const Environment& env, const Vec2& p,
                       const std::vector<int>& beacon_indices, std::vector<double>& out) {
  out.clear();
  out.reserve(beacon_indices.size());
  for (int idx : beacon_indices) {
    if (idx < 0 || idx >= static_cast<int>(env.beacons.size()))
      throw std::out_of_range("predict_distances: beacon index " + std::to_string(idx));
    out.push_back(distance(p, env.beacons[static_cast<std::size_t>(idx)]));
  }
}

Eigen::MatrixXd measurement_jacobian(const Environment& env, const Vec2& p,
                                     const std::vector<int>& beacon_indices) {
  const int k = static_cast<int>(beacon_indices.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, 3);
  for (int j = 0; j < k; ++j) {
    const int idx = beacon_indices[static_cast<std::size_t>(j)];
    if (idx < 0 || idx >= static_cast<int>(env.beacons.size()))
      throw std::out_of_range("measurement_jacobian: beacon index " + std::to_string(idx));
    const Vec2& s = env.beacons[static_cast<std::size_t>(idx)];
    const double d = distance(p, s);
    if (d < 1e-9)
      throw std::domain_error("measurement_jacobian: position coincides with beacon " +
                              std::to_string(idx));
    h(j, 0) = (p.x - s.x) / d;
    h(j, 1) = (p.y - s.y) / d;
  }
  return h;
}

double log_likelihood_isotropic(const Eigen::VectorXd& residual, double sigma_sq) {
  const double k = static_cast<double>(residual.size());
  return -0.5 * k * std::log(two_pi * sigma_sq) - residual.squaredNorm() / (2.0 * sigma_sq);
}

}  // namespace symloc
