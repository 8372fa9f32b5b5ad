#include "symloc/ekf.hpp"

#include <algorithm>
#include <cmath>

#include "symloc/kalman.hpp"

namespace symloc {

ProcessNoiseBasis sample_process_noise_basis(double speed, const MotionNoiseModel& noise,
                                             int samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("sample_process_noise_basis: samples must be >= 1");
  // At heading 0 the deviation of the noisy step from the noiseless one is
  //   v = (u - (u+eta_r) cos eta_phi, -(u+eta_r) sin eta_phi, -eta_phi);
  // at heading theta it is Rot(theta) * v. Accumulate E[v v^T] once.
  ProcessNoiseBasis basis;
  for (int i = 0; i < samples; ++i) {
    const MotionNoise n = noise.sample(rng);
    const double step = speed + n.eta_r;
    const Eigen::Vector3d v(speed - step * std::cos(n.eta_phi), -step * std::sin(n.eta_phi),
                            -n.eta_phi);
    basis.m += v * v.transpose();
  }
  basis.m /= static_cast<double>(samples);
  return basis;
}

Eigen::Matrix3d rotate_process_noise(const ProcessNoiseBasis& basis, double theta) {
  Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  return rot * basis.m * rot.transpose();
}

void ekf_predict_with_basis(GaussianBelief& b, const Control& c, const ProcessNoiseBasis& basis) {
  const double heading = b.mean(2) + c.dphi;  // pre-wrap heading of the step
  const Eigen::Matrix3d f = motion_jacobian(b.pose(), c);
  const Pose moved = motion_step(b.pose(), c, {});
  b.mean << moved.x, moved.y, moved.phi;
  b.cov = f * b.cov * f.transpose() + rotate_process_noise(basis, heading);
  b.cov = 0.5 * (b.cov + b.cov.transpose().eval());
}

void ekf_predict(GaussianBelief& b, const Control& c, const MotionNoiseModel& noise,
                 int q_samples, Rng& rng) {
  const ProcessNoiseBasis basis = sample_process_noise_basis(c.u, noise, q_samples, rng);
  ekf_predict_with_basis(b, c, basis);
}

bool ekf_update(GaussianBelief& b, const Environment& env, const Measurement& z,
                double sigma_sq) {
  const int k = z.size();
  if (k == 0) return true;

  // Associate against the belief's own nearest beacons; measured distances
  // are matched in ascending order.
  const auto nearest = k_nearest_beacons(env, {b.mean(0), b.mean(1)}, k);
  std::vector<int> indices;
  indices.reserve(nearest.size());
  Eigen::VectorXd predicted(k);
  for (int j = 0; j < k; ++j) {
    indices.push_back(nearest[static_cast<std::size_t>(j)].first);
    predicted(j) = nearest[static_cast<std::size_t>(j)].second;
  }
  std::vector<double> sorted_z = z.distances;
  std::sort(sorted_z.begin(), sorted_z.end());

  Eigen::MatrixXd h;
  try {
    h = measurement_jacobian(env, {b.mean(0), b.mean(1)}, indices);
  } catch (const std::domain_error&) {
    return false;  // mean sits on a beacon; skip this update
  }

  Eigen::VectorXd innovation(k);
  for (int j = 0; j < k; ++j) innovation(j) = sorted_z[static_cast<std::size_t>(j)] - predicted(j);

  Eigen::VectorXd x = b.mean;
  Eigen::MatrixXd p = b.cov;
  const Eigen::MatrixXd r = sigma_sq * Eigen::MatrixXd::Identity(k, k);
  if (!kalman_update(x, p, innovation, h, r, sigma_sq)) return false;

  x(2) = wrap_angle(x(2));
  b.mean = x;
  b.cov = p;
  return true;
}

}  // namespace symloc
