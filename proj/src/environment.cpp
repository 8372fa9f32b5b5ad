#include "symloc/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symloc {

namespace {

std::string rect_str(const Rect& r) {
  return "[" + std::to_string(r.x_min) + ", " + std::to_string(r.y_min) + ", " +
         std::to_string(r.x_max) + ", " + std::to_string(r.y_max) + "]";
}

}  // namespace

void SymmetrySpec::validate() const {
  if (tiles_x < 1 || tiles_y < 1) throw ValidationError("symmetry spec: tile counts must be >= 1");
  if (tile_w <= 0.0 || tile_h <= 0.0)
    throw ValidationError("symmetry spec: tile dimensions must be positive");
  Environment tile;
  tile.name = "tile";
  tile.width = tile_w;
  tile.height = tile_h;
  tile.obstacles = tile_obstacles;
  tile.beacons = tile_beacons;
  tile.validate();
}

void Environment::validate() const {
  if (width <= 0.0 || height <= 0.0)
    throw ValidationError("environment '" + name + "': width and height must be positive");
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const Rect& r = obstacles[i];
    if (r.width() <= 0.0 || r.height() <= 0.0)
      throw ValidationError("environment '" + name + "': obstacle " + std::to_string(i) + " " +
                            rect_str(r) + " has non-positive extent");
    if (r.x_min < 0.0 || r.y_min < 0.0 || r.x_max > width || r.y_max > height)
      throw ValidationError("environment '" + name + "': obstacle " + std::to_string(i) + " " +
                            rect_str(r) + " lies outside the world");
  }
  if (beacons.empty()) throw ValidationError("environment '" + name + "': no beacons");
  for (std::size_t i = 0; i < beacons.size(); ++i) {
    const Vec2& b = beacons[i];
    if (b.x < 0.0 || b.x > width || b.y < 0.0 || b.y > height)
      throw ValidationError("environment '" + name + "': beacon " + std::to_string(i) + " (" +
                            std::to_string(b.x) + ", " + std::to_string(b.y) +
                            ") lies outside the world");
  }
  if (symmetry) {
    symmetry->validate();
    if (symmetry->world_w() != width || symmetry->world_h() != height)
      throw ValidationError("environment '" + name + "': symmetry tiling does not cover the world");
  }
}

bool collides(const Environment& env, const Vec2& p) {
  if (p.x < 0.0 || p.x > env.width || p.y < 0.0 || p.y > env.height) return true;
  for (const Rect& r : env.obstacles)
    if (r.contains(p)) return true;
  return false;
}

bool segment_collides(const Environment& env, const Vec2& a, const Vec2& b) {
  const Rect world = env.bounds();
  if (!world.contains(a) || !world.contains(b)) return true;
  for (const Rect& r : env.obstacles)
    if (r.intersects_segment(a, b)) return true;
  return false;
}

void k_nearest_beacons(const Environment& env, const Vec2& p, int k,
                       std::vector<std::pair<int, double>>& out) {
  const int n = static_cast<int>(env.beacons.size());
  if (k < 0 || k > n)
    throw std::invalid_argument("k_nearest_beacons: k = " + std::to_string(k) + " but " +
                                std::to_string(n) + " beacons exist");
  out.clear();
  out.reserve(env.beacons.size());
  for (int i = 0; i < n; ++i) out.emplace_back(i, squared_distance(p, env.beacons[i]));
  // Order by (distance, index); squared distance preserves the distance order.
  auto cmp = [](const std::pair<int, double>& a, const std::pair<int, double>& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  };
  std::partial_sort(out.begin(), out.begin() + k, out.end(), cmp);
  out.resize(static_cast<std::size_t>(k));
  for (auto& e : out) e.second = distance(p, env.beacons[static_cast<std::size_t>(e.first)]);
}

std::vector<std::pair<int, double>> k_nearest_beacons(const Environment& env, const Vec2& p,
                                                      int k) {
  std::vector<std::pair<int, double>> out;
  k_nearest_beacons(env, p, k, out);
  return out;
}

Pose sample_free_pose(const Environment& env, Rng& rng) {
  std::uniform_real_distribution<double> ux(0.0, env.width);
  std::uniform_real_distribution<double> uy(0.0, env.height);
  std::uniform_real_distribution<double> uphi(0.0, two_pi);
  constexpr int max_attempts = 100000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Vec2 p{ux(rng), uy(rng)};
    if (!collides(env, p)) return {p.x, p.y, uphi(rng)};
  }
  throw std::runtime_error("sample_free_pose: no free position found in " +
                           std::to_string(max_attempts) + " draws; map near-fully blocked");
}

double rect_union_area(const std::vector<Rect>& rects) {
  if (rects.empty()) return 0.0;
  std::vector<double> xs;
  xs.reserve(rects.size() * 2);
  for (const Rect& r : rects) {
    xs.push_back(r.x_min);
    xs.push_back(r.x_max);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double total = 0.0;
  std::vector<std::pair<double, double>> spans;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x0 = xs[i];
    const double x1 = xs[i + 1];
    if (x1 <= x0) continue;
    spans.clear();
    for (const Rect& r : rects)
      if (r.x_min <= x0 && r.x_max >= x1) spans.emplace_back(r.y_min, r.y_max);
    if (spans.empty()) continue;
    std::sort(spans.begin(), spans.end());
    double covered = 0.0;
    double cur_lo = spans[0].first;
    double cur_hi = spans[0].second;
    for (std::size_t j = 1; j < spans.size(); ++j) {
      if (spans[j].first > cur_hi) {
        covered += cur_hi - cur_lo;
        cur_lo = spans[j].first;
        cur_hi = spans[j].second;
      } else {
        cur_hi = std::max(cur_hi, spans[j].second);
      }
    }
    covered += cur_hi - cur_lo;
    total += (x1 - x0) * covered;
  }
  return total;
}

double free_area(const Environment& env) {
  std::vector<Rect> clipped;
  clipped.reserve(env.obstacles.size());
  for (const Rect& r : env.obstacles) {
    Rect c{std::max(r.x_min, 0.0), std::max(r.y_min, 0.0), std::min(r.x_max, env.width),
           std::min(r.y_max, env.height)};
    if (c.width() > 0.0 && c.height() > 0.0) clipped.push_back(c);
  }
  return env.width * env.height - rect_union_area(clipped);
}

Vec2 free_space_centroid(const Environment& env, int resolution) {
  // Cell-center sampling on a fixed grid; deterministic and ample for an
  // initial guess.
  double sum_x = 0.0;
  double sum_y = 0.0;
  long count = 0;
  for (int iy = 0; iy < resolution; ++iy) {
    const double y = (iy + 0.5) * env.height / resolution;
    for (int ix = 0; ix < resolution; ++ix) {
      const double x = (ix + 0.5) * env.width / resolution;
      if (!collides(env, {x, y})) {
        sum_x += x;
        sum_y += y;
        ++count;
      }
    }
  }
  if (count == 0)
    throw std::runtime_error("free_space_centroid: no free cells in '" + env.name + "'");
  return {sum_x / count, sum_y / count};
}

}  // namespace symloc
