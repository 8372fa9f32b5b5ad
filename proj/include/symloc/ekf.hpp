#ifndef SYMLOC_EKF_HPP
#define SYMLOC_EKF_HPP

#include <Eigen/Dense>

#include "symloc/environment.hpp"
#include "symloc/models.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"

namespace symloc {

/// Gaussian belief over (x, y, phi). The heading component of `mean` is kept
/// wrapped to [0, 2*pi).
struct GaussianBelief {
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  Eigen::Matrix3d cov = Eigen::Matrix3d::Identity();

  Pose pose() const { return {mean(0), mean(1), mean(2)}; }
};

/// Heading-independent second moment of the motion deviation, estimated from
/// `samples` noise draws. The deviation of a noisy step from the noiseless
/// one at commanded heading theta factors as Rot(theta) * v with v depending
/// only on the noise draw, so one sampled basis serves every heading:
///   Q(theta) = Rot(theta) * basis * Rot(theta)^T   (exactly).
struct ProcessNoiseBasis {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
};

ProcessNoiseBasis sample_process_noise_basis(double speed, const MotionNoiseModel& noise,
                                             int samples, Rng& rng);

Eigen::Matrix3d rotate_process_noise(const ProcessNoiseBasis& basis, double theta);

/// Noiseless motion applied to the mean; covariance propagated through the
/// motion Jacobian plus sampled process noise.
void ekf_predict(GaussianBelief& b, const Control& c, const MotionNoiseModel& noise,
                 int q_samples, Rng& rng);

/// Same, reusing an already-sampled basis (shared across a particle bank).
void ekf_predict_with_basis(GaussianBelief& b, const Control& c, const ProcessNoiseBasis& basis);

/// Range update against the k nearest beacons of the *predicted mean* (own
/// data association); the reported distances are consumed in ascending
/// order to match. Returns false and leaves the belief untouched when the
/// mean sits on a beacon or the update is ill-conditioned.
bool ekf_update(GaussianBelief& b, const Environment& env, const Measurement& z,
                double sigma_sq);

}  // namespace symloc

#endif
