#include "symloc/kalman.hpp"

namespace symloc {

bool kalman_update(Eigen::VectorXd& x, Eigen::MatrixXd& P, const Eigen::VectorXd& innovation,
                   const Eigen::MatrixXd& H, const Eigen::MatrixXd& R, double r_floor) {
  Eigen::MatrixXd s = H * P * H.transpose() + R;
  s = 0.5 * (s + s.transpose().eval());
  // lambda_max(S) <= trace(S) and lambda_min(S) >= lambda_min(R) >= r_floor,
  // so this bounds the condition number without an eigensolve.
  if (!(r_floor > 0.0) || !s.allFinite() || s.trace() > 1e12 * r_floor) return false;

  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) return false;

  // K = P H^T S^{-1}, computed as solving S K^T = H P.
  const Eigen::MatrixXd k_gain = llt.solve(H * P).transpose();
  x += k_gain * innovation;
  const Eigen::MatrixXd correction = k_gain * (H * P);
  P -= correction;
  P = 0.5 * (P + P.transpose().eval());
  return true;
}

}  // namespace symloc
