#ifndef SYMLOC_GEOMETRY_HPP
#define SYMLOC_GEOMETRY_HPP

#include <algorithm>
#include <cmath>

namespace symloc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

inline double squared_distance(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Vec2& a, const Vec2& b) {
  return std::sqrt(squared_distance(a, b));
}

/// Axis-aligned rectangle, treated as a closed set: boundary points are inside.
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }

  bool contains(const Vec2& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  /// Closed-set segment test: a segment that merely touches the boundary
  /// (including a single corner point) intersects.
  bool intersects_segment(const Vec2& a, const Vec2& b) const {
    double t0 = 0.0;
    double t1 = 1.0;
    const double d[2] = {b.x - a.x, b.y - a.y};
    const double lo[2] = {x_min, y_min};
    const double hi[2] = {x_max, y_max};
    const double p0[2] = {a.x, a.y};
    for (int i = 0; i < 2; ++i) {
      if (d[i] == 0.0) {
        if (p0[i] < lo[i] || p0[i] > hi[i]) return false;
        continue;
      }
      double ta = (lo[i] - p0[i]) / d[i];
      double tb = (hi[i] - p0[i]) / d[i];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) return false;
    }
    return true;
  }

  /// Area of the intersection with another rectangle.
  double overlap_area(const Rect& other) const {
    const double w = std::min(x_max, other.x_max) - std::max(x_min, other.x_min);
    const double h = std::min(y_max, other.y_max) - std::max(y_min, other.y_min);
    if (w <= 0.0 || h <= 0.0) return 0.0;
    return w * h;
  }

  friend bool operator==(const Rect& a, const Rect& b) {
    return a.x_min == b.x_min && a.y_min == b.y_min && a.x_max == b.x_max && a.y_max == b.y_max;
  }
};

}  // namespace symloc

#endif
