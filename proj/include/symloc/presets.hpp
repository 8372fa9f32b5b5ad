#ifndef SYMLOC_PRESETS_HPP
#define SYMLOC_PRESETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symloc/environment.hpp"

namespace symloc {

/// Replicate a tile template over a tiles_x x tiles_y grid. Beacons that land
/// on shared tile edges are deduplicated. The result carries `symmetry`.
Environment generate_symmetric_world(const SymmetrySpec& spec, const std::string& name);

/// Remove every obstacle and beacon belonging to one tile of a replicated
/// world, breaking its symmetry. Tile membership is by half-open cell
/// [x0, x0+tw) x [y0, y0+th): beacons on a shared edge belong to the
/// neighbor on the right/top. The result drops `symmetry` and gains an
/// "n-" name prefix.
Environment make_nonsymmetric(const Environment& env, int tile_index);

/// Procedural maze over a square grid of 2 m cells: thin walls, irregular
/// layout, no translational symmetry. Deterministic for a given seed.
Environment generate_labyrinth(std::uint64_t seed, int cells_per_side = 8, int beacon_count = 16);

/// Built-in maps: "world10", "World18", "WORLD27", "labyrinth", and the
/// symmetry-broken variants "n-world10", "n-World18", "n-WORLD27".
/// `seed` only affects the labyrinth; the tiled families are fixed.
Environment preset_environment(const std::string& name, std::uint64_t seed = 0);

std::vector<std::string> preset_names();

}  // namespace symloc

#endif
