#include "symloc/trajectory.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace symloc {

namespace {

bool try_generate(const Environment& env, const TrajectoryParams& params, Rng& rng,
                  Trajectory& out) {
  out.poses.clear();
  out.controls.clear();
  out.measurements.clear();

  Pose pose = sample_free_pose(env, rng);
  out.poses.push_back(pose);
  const double u =
      std::uniform_real_distribution<double>(params.speed_min, params.speed_max)(rng);
  std::uniform_real_distribution<double> uphi(0.0, two_pi);

  for (int t = 0; t < params.steps; ++t) {
    bool stepped = false;
    for (int attempt = 0; attempt < params.max_heading_attempts; ++attempt) {
      // Keep course when possible; a blocked (or unlucky noisy) step turns
      // the object to a fresh random heading.
      const double dphi = attempt == 0 ? 0.0 : uphi(rng);
      const Control c{u, dphi};
      const Pose planned = motion_step(pose, c, {});
      if (segment_collides(env, pose.position(), planned.position())) continue;
      const MotionNoise noise = params.truth_noise.sample(rng);
      const Pose actual = motion_step(pose, c, noise);
      if (segment_collides(env, pose.position(), actual.position())) continue;

      pose = actual;
      out.poses.push_back(pose);
      out.controls.push_back(c);
      out.measurements.push_back(
          measure(env, pose.position(), params.k_measure, params.measurement, rng));
      stepped = true;
      break;
    }
    if (!stepped) return false;  // trapped; caller restarts from scratch
  }
  return true;
}

}  // namespace

Trajectory generate_trajectory(const Environment& env, const TrajectoryParams& params,
                               std::uint64_t seed) {
  if (params.steps < 1) throw std::invalid_argument("generate_trajectory: steps must be >= 1");
  if (params.speed_min < 0.0 || params.speed_max < params.speed_min)
    throw std::invalid_argument("generate_trajectory: bad speed range");
  Rng rng(seed);
  Trajectory traj;
  traj.seed = seed;
  for (int restart = 0; restart <= params.max_restarts; ++restart) {
    if (try_generate(env, params, rng, traj)) {
      traj.restarts = restart;
      return traj;
    }
  }
  throw std::runtime_error("generate_trajectory: object trapped in '" + env.name + "' after " +
                           std::to_string(params.max_restarts) + " restarts");
}

void save_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trajectory file '" + path + "'");
  char buf[512];
  const Pose& start = traj.poses.at(0);
  std::snprintf(buf, sizeof buf, "# start %.17g %.17g %.17g\n", start.x, start.y, start.phi);
  out << buf;
  std::snprintf(buf, sizeof buf, "# seed %" PRIu64 "\n# restarts %d\n", traj.seed, traj.restarts);
  out << buf;
  for (int t = 0; t < traj.steps(); ++t) {
    const Pose& p = traj.poses[static_cast<std::size_t>(t) + 1];
    const Control& c = traj.controls[static_cast<std::size_t>(t)];
    const Measurement& z = traj.measurements[static_cast<std::size_t>(t)];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g", t + 1, p.x, p.y, p.phi,
                  c.u, c.dphi);
    out << buf;
    for (int idx : z.beacon_indices) out << ',' << idx;
    for (double d : z.distances) {
      std::snprintf(buf, sizeof buf, ",%.17g", d);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing trajectory file '" + path + "'");
}

Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file '" + path + "'");
  Trajectory traj;
  bool have_start = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("trajectory file '" + path + "' line " + std::to_string(lineno) +
                               ": " + what);
    };
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "start") {
        Pose p;
        if (!(ss >> p.x >> p.y >> p.phi)) fail("malformed start pose");
        traj.poses.assign(1, p);
        have_start = true;
      } else if (key == "seed") {
        if (!(ss >> traj.seed)) fail("malformed seed");
      } else if (key == "restarts") {
        if (!(ss >> traj.restarts)) fail("malformed restarts");
      }
      continue;
    }
    if (!have_start) fail("step row before '# start' header");
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 6 || (fields.size() - 6) % 2 != 0) fail("wrong field count");
    const int k = static_cast<int>((fields.size() - 6) / 2);
    try {
      const int t = std::stoi(fields[0]);
      if (t != traj.steps() + 1) fail("steps out of order");
      Pose p{std::stod(fields[1]), std::stod(fields[2]), std::stod(fields[3])};
      Control c{std::stod(fields[4]), std::stod(fields[5])};
      Measurement z;
      for (int j = 0; j < k; ++j)
        z.beacon_indices.push_back(std::stoi(fields[static_cast<std::size_t>(6 + j)]));
      for (int j = 0; j < k; ++j)
        z.distances.push_back(std::stod(fields[static_cast<std::size_t>(6 + k + j)]));
      traj.poses.push_back(p);
      traj.controls.push_back(c);
      traj.measurements.push_back(std::move(z));
    } catch (const std::invalid_argument&) {
      fail("non-numeric field");
    } catch (const std::out_of_range&) {
      fail("numeric field out of range");
    }
  }
  if (!have_start || traj.steps() == 0)
    throw std::runtime_error("trajectory file '" + path + "': empty or missing header");
  return traj;
}

}  // namespace symloc
