#ifndef SYMLOC_ENVIRONMENT_HPP
#define SYMLOC_ENVIRONMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symloc/geometry.hpp"
#include "symloc/pose.hpp"
#include "symloc/rng.hpp"

namespace symloc {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tile template for worlds built by replication: obstacles and beacons are
/// given relative to the tile origin.
struct SymmetrySpec {
  int tiles_x = 1;
  int tiles_y = 1;
  double tile_w = 1.0;
  double tile_h = 1.0;
  std::vector<Rect> tile_obstacles;
  std::vector<Vec2> tile_beacons;

  double world_w() const { return tiles_x * tile_w; }
  double world_h() const { return tiles_y * tile_h; }
  void validate() const;
};

/// Rectangular world with axis-aligned obstacle blocks and point beacons.
/// Immutable after construction; safe to share across threads.
struct Environment {
  std::string name;
  double width = 0.0;
  double height = 0.0;
  std::vector<Rect> obstacles;
  std::vector<Vec2> beacons;

  /// Present when the world was produced by tile replication. Carried as
  /// in-memory metadata only; not part of the map file format.
  std::optional<SymmetrySpec> symmetry;

  Rect bounds() const { return {0.0, 0.0, width, height}; }

  /// Throws ValidationError naming the offending entity.
  void validate() const;

  /// Map identity: the persisted fields only (symmetry metadata excluded).
  friend bool operator==(const Environment& a, const Environment& b) {
    return a.name == b.name && a.width == b.width && a.height == b.height &&
           a.obstacles == b.obstacles && a.beacons == b.beacons;
  }
};

/// Point is blocked if it lies in any obstacle (closed) or outside the world.
bool collides(const Environment& env, const Vec2& p);

/// Swept test: true if segment ab touches any obstacle or leaves the world.
bool segment_collides(const Environment& env, const Vec2& a, const Vec2& b);

/// The k smallest beacon distances, ascending, ties broken by lower index.
/// Appends (index, distance) pairs to `out` (cleared first); no allocation
/// when `out` has enough capacity.
void k_nearest_beacons(const Environment& env, const Vec2& p, int k,
                       std::vector<std::pair<int, double>>& out);
std::vector<std::pair<int, double>> k_nearest_beacons(const Environment& env, const Vec2& p, int k);

/// Position uniform over free space by rejection, heading uniform on [0, 2*pi).
/// Throws if the map looks (near-)fully blocked.
Pose sample_free_pose(const Environment& env, Rng& rng);

/// Exact area of the union of a set of axis-aligned rectangles (overlaps
/// counted once); coordinate-compression sweep.
double rect_union_area(const std::vector<Rect>& rects);

/// Exact free area: world area minus the obstacle union (clipped to the
/// world). Used for expected-mass computations.
double free_area(const Environment& env);

/// Centroid of free space, estimated on a fixed grid. Deterministic.
Vec2 free_space_centroid(const Environment& env, int resolution = 256);

}  // namespace symloc

#endif
