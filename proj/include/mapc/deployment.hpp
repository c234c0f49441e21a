#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mapc {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

/// Enterprise layout: `num_aps` rooms of `room_width_m` x `room_depth_m`
/// laid out in a row along x, one AP at each room center and
/// `stas_per_ap` stations dropped uniformly inside each room.
struct ScenarioConfig {
  std::size_t num_aps = 4;
  std::size_t stas_per_ap = 3;
  double room_width_m = 6.0;
  double room_depth_m = 6.0;
  std::uint64_t seed = 0;
  std::size_t sharing_ap_index = 0;

  /// Throws ConfigError when an invariant does not hold.
  void validate() const;
};

struct Deployment {
  std::vector<Point> ap_positions;
  std::vector<Point> sta_positions;
  /// association[s] is the AP serving station s.
  std::vector<std::size_t> association;
  double room_width_m = 6.0;
  double room_depth_m = 6.0;

  std::size_t num_aps() const { return ap_positions.size(); }
  std::size_t total_stas() const { return sta_positions.size(); }

  /// Station indices served by `ap`, ascending.
  std::vector<std::size_t> stas_of(std::size_t ap) const;

  /// True when `p` lies inside room `room` (boundary inclusive).
  bool in_room(const Point& p, std::size_t room) const;

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

/// Center of room `room` for the given room size.
Point room_center(std::size_t room, double room_width_m, double room_depth_m);

/// Draws a deployment from `cfg`. Station coordinates come from a
/// std::mt19937_64 seeded with cfg.seed; each draw is mapped to [0, 1)
/// by taking its top 53 bits, so results are identical on every
/// platform. Stations are drawn room by room, x then y per station.
Deployment generate_deployment(const ScenarioConfig& cfg);

/// Checks the association, room containment and AP/STA coincidence
/// invariants. Throws ScenarioError.
void validate_deployment(const Deployment& dep);

/// Scenario document (JSON):
///   { "room": {"width": 6, "depth": 6},          (optional, default 6x6)
///     "aps":  [ {"x": 3, "y": 3, "id": 0}, ... ],  ("id" optional)
///     "stas": [ {"x": 3.5, "y": 2.5, "ap": 0, "id": 0}, ... ] }
/// Rooms follow the same row layout as generated deployments.
Deployment load_scenario(const nlohmann::json& doc);
Deployment load_scenario_file(const std::string& path);

nlohmann::json to_scenario_json(const Deployment& dep);

}  // namespace mapc
