#ifndef SYMLOC_MODELS_HPP
#define SYMLOC_MODELS_HPP

#include <Eigen/Dense>
#include <vector>

#include "symloc/environment.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"

namespace symloc {

struct MotionNoise {
  double eta_r = 0.0;    // speed perturbation
  double eta_phi = 0.0;  // heading perturbation
};

/// How motion noise is drawn. The ground-truth simulator uses uniform draws
/// on [-sigma, sigma]; the filters assume zero-mean Gaussians with matching
/// scale parameters.
enum class NoiseDraw { Uniform, Gaussian };

struct MotionNoiseModel {
  double sigma_r = 0.02;
  double sigma_phi = 0.01 * two_pi;
  NoiseDraw draw = NoiseDraw::Gaussian;

  MotionNoise sample(Rng& rng) const;
  Eigen::Matrix2d covariance() const;  // of the Gaussian interpretation
};

/// One step of unicycle motion:
///   x'   = x + (u + eta_r) * cos(phi + dphi + eta_phi)
///   y'   = y + (u + eta_r) * sin(phi + dphi + eta_phi)
///   phi' = wrap(phi + dphi + eta_phi)
Pose motion_step(const Pose& p, const Control& c, const MotionNoise& n);

/// Jacobian of the noiseless step w.r.t. (x, y, phi).
Eigen::Matrix3d motion_jacobian(const Pose& p, const Control& c);

/// Range readings to a set of beacons, identified by index.
struct Measurement {
  std::vector<int> beacon_indices;
  std::vector<double> distances;

  int size() const { return static_cast<int>(beacon_indices.size()); }
};

struct MeasurementNoiseModel {
  double sigma_sq = 0.01;  // variance of additive range noise

  double sample(Rng& rng) const;  // one Gaussian draw, N(0, sigma_sq)
};

/// Ground-truth sensing: distances from `p` to its k nearest beacons plus
/// independent Gaussian noise. Beacon identities are reported.
Measurement measure(const Environment& env, const Vec2& p, int k,
                    const MeasurementNoiseModel& noise, Rng& rng);

/// Noise-free distances from `p` to an explicit beacon set (data association
/// fixed by the caller).
void predict_distances(const Environment& env, const Vec2& p,
                       const std::vector<int>& beacon_indices, std::vector<double>& out);

/// Rows d(dist_j)/d(x,y,phi) for the given beacons. Throws if `p` is within
/// 1e-9 of a beacon (direction undefined).
Eigen::MatrixXd measurement_jacobian(const Environment& env, const Vec2& p,
                                     const std::vector<int>& beacon_indices);

/// Log density of residual r under N(0, sigma_sq * I):
///   -k/2 log(2 pi sigma_sq) - |r|^2 / (2 sigma_sq)
double log_likelihood_isotropic(const Eigen::VectorXd& residual, double sigma_sq);

}  // namespace symloc

#endif
