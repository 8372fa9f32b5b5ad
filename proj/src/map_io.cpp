#include "symloc/map_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace symloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("map format: " + what);
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) fail(std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

Environment map_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "width" && key != "height" && key != "obstacles" &&
        key != "beacons")
      fail("unknown key '" + key + "'");
  }

  Environment env;
  if (!j.contains("name") || !j.at("name").is_string()) fail("missing string key 'name'");
  env.name = j.at("name").get<std::string>();
  env.width = number_field(j, "width");
  env.height = number_field(j, "height");

  if (!j.contains("obstacles") || !j.at("obstacles").is_array())
    fail("missing array key 'obstacles'");
  for (const json& o : j.at("obstacles")) {
    if (!o.is_array() || o.size() != 4 || !o[0].is_number() || !o[1].is_number() ||
        !o[2].is_number() || !o[3].is_number())
      fail("each obstacle must be [x_min, y_min, x_max, y_max]");
    env.obstacles.push_back(
        {o[0].get<double>(), o[1].get<double>(), o[2].get<double>(), o[3].get<double>()});
  }

  if (!j.contains("beacons") || !j.at("beacons").is_array()) fail("missing array key 'beacons'");
  for (const json& b : j.at("beacons")) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
      fail("each beacon must be [x, y]");
    env.beacons.push_back({b[0].get<double>(), b[1].get<double>()});
  }

  env.validate();
  return env;
}

Environment load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return map_from_json_text(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(e.what()) + " (in '" + path + "')");
  }
}

std::string map_to_json_text(const Environment& env) {
  json obstacles = json::array();
  for (const Rect& r : env.obstacles) obstacles.push_back({r.x_min, r.y_min, r.x_max, r.y_max});
  json beacons = json::array();
  for (const Vec2& b : env.beacons) beacons.push_back({b.x, b.y});
  json j{{"name", env.name},
         {"width", env.width},
         {"height", env.height},
         {"obstacles", obstacles},
         {"beacons", beacons}};
  return j.dump(2) + "\n";
}

void save_map(const Environment& env, const std::string& path) {
  env.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write map file '" + path + "'");
  out << map_to_json_text(env);
  if (!out) throw std::runtime_error("failed writing map file '" + path + "'");
}

}  // namespace symloc
