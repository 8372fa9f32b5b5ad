#ifndef SYMLOC_POSE_HPP
#define SYMLOC_POSE_HPP

#include <cmath>
#include <numbers>

#include "symloc/geometry.hpp"

namespace symloc {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Normalize an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  double w = a - two_pi * std::floor(a / two_pi);
  if (w >= two_pi) w = 0.0;  // guard against rounding at the seam
  return w;
}

/// Shortest signed difference a - b, in [-pi, pi).
inline double angle_diff(double a, double b) {
  double d = wrap_angle(a - b);
  if (d >= std::numbers::pi) d -= two_pi;
  return d;
}

/// Planar state: position and heading. Heading is kept in [0, 2*pi).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;

  Vec2 position() const { return {x, y}; }

  friend bool operator==(const Pose& a, const Pose& b) {
    return a.x == b.x && a.y == b.y && a.phi == b.phi;
  }
};

/// Commanded speed per step and commanded heading change.
struct Control {
  double u = 0.0;
  double dphi = 0.0;
};

}  // namespace symloc

#endif
