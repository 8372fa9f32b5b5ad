#ifndef SYMLOC_KALMAN_HPP
#define SYMLOC_KALMAN_HPP

#include <Eigen/Dense>

namespace symloc {

/// Linear-Gaussian propagation of the covariance through x -> F x (+ noise Q).
/// Mean propagation is the caller's job (the transition may be nonlinear).
inline Eigen::MatrixXd kalman_predict_cov(const Eigen::MatrixXd& P, const Eigen::MatrixXd& F,
                                          const Eigen::MatrixXd& Q) {
  return F * P * F.transpose() + Q;
}

/// Measurement update with observation matrix H and noise covariance R.
/// On success, overwrites (x, P) with the posterior and returns true.
/// Returns false (leaving x, P untouched) when the innovation covariance is
/// too ill-conditioned for a trustworthy gain; callers should count the skip.
///
/// `r_floor` is a known lower bound on the smallest eigenvalue of R (for
/// isotropic R = sigma^2 I it is sigma^2); the conditioning test is
/// trace(S) > 1e12 * r_floor, cheap and valid because lambda_min(S) >= r_floor.
bool kalman_update(Eigen::VectorXd& x, Eigen::MatrixXd& P, const Eigen::VectorXd& innovation,
                   const Eigen::MatrixXd& H, const Eigen::MatrixXd& R, double r_floor);

}  // namespace symloc

#endif
