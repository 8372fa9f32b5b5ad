#ifndef SYMLOC_MAP_IO_HPP
#define SYMLOC_MAP_IO_HPP

#include <string>

#include "symloc/environment.hpp"

namespace symloc {

/// Map file format (JSON):
///   {
///     "name": "world10",
///     "width": 10.0, "height": 10.0,
///     "obstacles": [[xmin, ymin, xmax, ymax], ...],
///     "beacons": [[x, y], ...]
///   }
/// Unknown keys are rejected; the loaded map is validated.
Environment load_map(const std::string& path);
Environment map_from_json_text(const std::string& text);

void save_map(const Environment& env, const std::string& path);
std::string map_to_json_text(const Environment& env);

}  // namespace symloc

#endif
