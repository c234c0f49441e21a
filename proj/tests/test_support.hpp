#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mapc/deployment.hpp"
#include "mapc/phy.hpp"

namespace mapc::testing {

/// Deployment with explicit coordinates; APs are listed by position and
/// each STA by (x, y, ap).
inline Deployment make_deployment(std::vector<Point> aps,
                                  const std::vector<std::tuple<double, double, std::size_t>>& stas,
                                  double room = 6.0) {
  Deployment dep;
  dep.room_width_m = room;
  dep.room_depth_m = room;
  dep.ap_positions = std::move(aps);
  for (const auto& [x, y, ap] : stas) {
    dep.sta_positions.push_back({x, y});
    dep.association.push_back(ap);
  }
  return dep;
}

inline std::string scenario_path(const std::string& name) {
  return std::string(MAPC_SCENARIO_DIR) + "/" + name;
}

}  // namespace mapc::testing
