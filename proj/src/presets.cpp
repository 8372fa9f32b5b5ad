#include "symloc/presets.hpp"

#include <algorithm>
#include <numeric>

namespace symloc {

Environment generate_symmetric_world(const SymmetrySpec& spec, const std::string& name) {
  spec.validate();
  Environment env;
  env.name = name;
  env.width = spec.world_w();
  env.height = spec.world_h();
  for (int j = 0; j < spec.tiles_y; ++j) {
    for (int i = 0; i < spec.tiles_x; ++i) {
      const double ox = i * spec.tile_w;
      const double oy = j * spec.tile_h;
      for (const Rect& r : spec.tile_obstacles)
        env.obstacles.push_back({ox + r.x_min, oy + r.y_min, ox + r.x_max, oy + r.y_max});
      for (const Vec2& b : spec.tile_beacons) {
        const Vec2 p{ox + b.x, oy + b.y};
        // Beacons on shared tile edges replicate onto the same point;
        // keep one copy. Preset coordinates are exactly representable,
        // so equality is exact.
        if (std::find(env.beacons.begin(), env.beacons.end(), p) == env.beacons.end())
          env.beacons.push_back(p);
      }
    }
  }
  env.symmetry = spec;
  env.validate();
  return env;
}

Environment make_nonsymmetric(const Environment& env, int tile_index) {
  if (!env.symmetry)
    throw std::invalid_argument("make_nonsymmetric: environment '" + env.name +
                                "' carries no tiling");
  const SymmetrySpec& s = *env.symmetry;
  const int tiles = s.tiles_x * s.tiles_y;
  if (tile_index < 0 || tile_index >= tiles)
    throw std::invalid_argument("make_nonsymmetric: tile index " + std::to_string(tile_index) +
                                " out of range [0, " + std::to_string(tiles) + ")");
  const double x0 = (tile_index % s.tiles_x) * s.tile_w;
  const double y0 = (tile_index / s.tiles_x) * s.tile_h;
  // Half-open tile cell: entities on a shared right/top edge belong to the
  // neighboring tile and survive.
  auto in_tile = [&](double x, double y) {
    return x >= x0 && x < x0 + s.tile_w && y >= y0 && y < y0 + s.tile_h;
  };

  Environment out;
  out.name = "n-" + env.name;
  out.width = env.width;
  out.height = env.height;
  for (const Rect& r : env.obstacles)
    if (!in_tile(r.x_min, r.y_min)) out.obstacles.push_back(r);
  for (const Vec2& b : env.beacons)
    if (!in_tile(b.x, b.y)) out.beacons.push_back(b);
  out.validate();
  return out;
}

Environment generate_labyrinth(std::uint64_t seed, int cells_per_side, int beacon_count) {
  // Maze over an n x n grid of 2x2 cells: spanning-tree walls (randomized
  // depth-first carving), then a fraction of the remaining walls is opened
  // to create loops. Walls are 0.4 thick, centered on cell edges.
  const int n = cells_per_side;
  if (n < 2) throw std::invalid_argument("generate_labyrinth: need at least 2x2 cells");
  if (beacon_count < 1 || beacon_count > n * n)
    throw std::invalid_argument("generate_labyrinth: beacon count must be in [1, cells^2]");
  constexpr double cell = 2.0;
  constexpr double half_thick = 0.2;
  Rng rng = make_stream(seed, 0x1ab);

  auto cell_id = [n](int i, int j) { return j * n + i; };
  // Wall keys: vertical wall right of (i,j) -> 0..; horizontal wall above -> offset.
  auto vwall = [n](int i, int j) { return j * (n - 1) + i; };
  auto hwall = [n](int i, int j) { return (n - 1) * n + j * n + i; };
  std::vector<bool> wall_present(2 * n * (n - 1), true);

  std::vector<bool> visited(n * n, false);
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    const int cur = stack.back();
    const int ci = cur % n;
    const int cj = cur / n;
    // Gather unvisited neighbors in a fixed order, then pick one at random.
    int ni[4];
    int nj[4];
    int count = 0;
    if (ci > 0 && !visited[cell_id(ci - 1, cj)]) ni[count] = ci - 1, nj[count] = cj, ++count;
    if (ci < n - 1 && !visited[cell_id(ci + 1, cj)]) ni[count] = ci + 1, nj[count] = cj, ++count;
    if (cj > 0 && !visited[cell_id(ci, cj - 1)]) ni[count] = ci, nj[count] = cj - 1, ++count;
    if (cj < n - 1 && !visited[cell_id(ci, cj + 1)]) ni[count] = ci, nj[count] = cj + 1, ++count;
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const int pick = std::uniform_int_distribution<int>(0, count - 1)(rng);
    const int ti = ni[pick];
    const int tj = nj[pick];
    if (ti != ci)
      wall_present[vwall(std::min(ci, ti), cj)] = false;
    else
      wall_present[hwall(ci, std::min(cj, tj))] = false;
    visited[cell_id(ti, tj)] = true;
    stack.push_back(cell_id(ti, tj));
  }

  // Open a quarter of the surviving walls so corridors loop.
  std::vector<int> remaining;
  for (int w = 0; w < static_cast<int>(wall_present.size()); ++w)
    if (wall_present[w]) remaining.push_back(w);
  std::shuffle(remaining.begin(), remaining.end(), rng);
  const std::size_t open = remaining.size() / 4;
  for (std::size_t w = 0; w < open; ++w) wall_present[static_cast<std::size_t>(remaining[w])] = false;

  Environment env;
  env.name = "labyrinth";
  env.width = n * cell;
  env.height = n * cell;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n - 1; ++i)
      if (wall_present[vwall(i, j)]) {
        const double x = (i + 1) * cell;
        env.obstacles.push_back({x - half_thick, j * cell, x + half_thick, (j + 1) * cell});
      }
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i)
      if (wall_present[hwall(i, j)]) {
        const double y = (j + 1) * cell;
        env.obstacles.push_back({i * cell, y - half_thick, (i + 1) * cell, y + half_thick});
      }

  // Beacons: jittered centers of distinct cells; the jitter keeps them
  // clear of the walls and off any regular lattice.
  std::vector<int> cells(n * n);
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (int b = 0; b < beacon_count; ++b) {
    const int c = cells[static_cast<std::size_t>(b)];
    const double cx = (c % n) * cell + 1.0;
    const double cy = (c / n) * cell + 1.0;
    env.beacons.push_back({cx + jitter(rng), cy + jitter(rng)});
  }

  env.validate();
  return env;
}

namespace {

SymmetrySpec tiled_spec(int tiles, double tile, const Rect& block) {
  SymmetrySpec s;
  s.tiles_x = tiles;
  s.tiles_y = tiles;
  s.tile_w = tile;
  s.tile_h = tile;
  s.tile_obstacles = {block};
  s.tile_beacons = {{0.0, 0.0}, {tile, 0.0}, {0.0, tile}, {tile, tile}, {tile / 2, tile / 2}};
  return s;
}

}  // namespace

Environment preset_environment(const std::string& name, std::uint64_t seed) {
  if (name == "world10")
    return generate_symmetric_world(tiled_spec(2, 5.0, {1.0, 1.0, 3.0, 2.4}), name);
  if (name == "World18")
    return generate_symmetric_world(tiled_spec(3, 6.0, {1.2, 1.2, 3.6, 2.9}), name);
  if (name == "WORLD27")
    return generate_symmetric_world(tiled_spec(3, 9.0, {1.8, 1.8, 5.4, 4.3}), name);
  // Seed 0 selects the canonical maze instance; any other seed a variant.
  if (name == "labyrinth") return generate_labyrinth(seed ? seed : 20240725);
  if (name.rfind("n-", 0) == 0) {
    const std::string base = name.substr(2);
    if (base == "world10" || base == "World18" || base == "WORLD27")
      return make_nonsymmetric(preset_environment(base, seed), 0);
  }
  std::string known;
  for (const std::string& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
  throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
}

std::vector<std::string> preset_names() {
  return {"world10", "World18", "WORLD27", "labyrinth",
          "n-world10", "n-World18", "n-WORLD27"};
}

}  // namespace symloc
