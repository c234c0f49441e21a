#include "mapc/deployment.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "mapc/error.hpp"

namespace mapc {

namespace {

// Top 53 bits of a 64-bit draw, scaled to [0, 1).
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> read_ids(const nlohmann::json& items, const char* what) {
  std::vector<std::size_t> order(items.size());
  std::vector<bool> seen(items.size(), false);
  bool any_id = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].contains("id")) {
      any_id = true;
      break;
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t id = i;
    if (any_id) {
      if (!items[i].contains("id")) {
        throw ScenarioError(std::string(what) + " entry " + std::to_string(i) +
                            " is missing \"id\" while others have one");
      }
      id = items[i].at("id").get<std::size_t>();
    }
    if (id >= items.size()) {
      throw ScenarioError(std::string(what) + " id " + std::to_string(id) + " out of range");
    }
    if (seen[id]) {
      throw ScenarioError("duplicate " + std::string(what) + " id " + std::to_string(id));
    }
    seen[id] = true;
    order[i] = id;
  }
  return order;
}

Point read_point(const nlohmann::json& item) {
  Point p{item.at("x").get<double>(), item.at("y").get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw ScenarioError("non-finite coordinate");
  }
  return p;
}

}  // namespace

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void ScenarioConfig::validate() const {
  if (num_aps < 1) throw ConfigError("num_aps must be >= 1");
  if (stas_per_ap < 1) throw ConfigError("stas_per_ap must be >= 1");
  if (!(room_width_m > 0.0) || !(room_depth_m > 0.0)) {
    throw ConfigError("room dimensions must be positive");
  }
  if (sharing_ap_index >= num_aps) {
    throw ConfigError("sharing_ap_index must be < num_aps");
  }
}

std::vector<std::size_t> Deployment::stas_of(std::size_t ap) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < association.size(); ++s) {
    if (association[s] == ap) out.push_back(s);
  }
  return out;
}

bool Deployment::in_room(const Point& p, std::size_t room) const {
  const double x0 = static_cast<double>(room) * room_width_m;
  return p.x >= x0 && p.x <= x0 + room_width_m && p.y >= 0.0 && p.y <= room_depth_m;
}

Point room_center(std::size_t room, double room_width_m, double room_depth_m) {
  return {(static_cast<double>(room) + 0.5) * room_width_m, 0.5 * room_depth_m};
}

Deployment generate_deployment(const ScenarioConfig& cfg) {
  cfg.validate();
  Deployment dep;
  dep.room_width_m = cfg.room_width_m;
  dep.room_depth_m = cfg.room_depth_m;
  std::mt19937_64 rng(cfg.seed);
  dep.ap_positions.reserve(cfg.num_aps);
  dep.sta_positions.reserve(cfg.num_aps * cfg.stas_per_ap);
  for (std::size_t m = 0; m < cfg.num_aps; ++m) {
    dep.ap_positions.push_back(room_center(m, cfg.room_width_m, cfg.room_depth_m));
    const double x0 = static_cast<double>(m) * cfg.room_width_m;
    for (std::size_t n = 0; n < cfg.stas_per_ap; ++n) {
      const double x = x0 + unit_uniform(rng) * cfg.room_width_m;
      const double y = unit_uniform(rng) * cfg.room_depth_m;
      dep.sta_positions.push_back({x, y});
      dep.association.push_back(m);
    }
  }
  return dep;
}

void validate_deployment(const Deployment& dep) {
  if (dep.ap_positions.empty()) throw ScenarioError("scenario has no APs");
  if (dep.sta_positions.empty()) throw ScenarioError("scenario has no STAs");
  if (!(dep.room_width_m > 0.0) || !(dep.room_depth_m > 0.0)) {
    throw ScenarioError("room dimensions must be positive");
  }
  if (dep.association.size() != dep.sta_positions.size()) {
    throw ScenarioError("association size does not match STA count");
  }
  for (std::size_t m = 0; m < dep.num_aps(); ++m) {
    if (!dep.in_room(dep.ap_positions[m], m)) {
      throw ScenarioError("AP " + std::to_string(m) + " lies outside its room");
    }
  }
  std::vector<bool> served(dep.num_aps(), false);
  for (std::size_t s = 0; s < dep.total_stas(); ++s) {
    const std::size_t ap = dep.association[s];
    if (ap >= dep.num_aps()) {
      throw ScenarioError("STA " + std::to_string(s) + " references unknown AP " +
                          std::to_string(ap));
    }
    if (!dep.in_room(dep.sta_positions[s], ap)) {
      throw ScenarioError("STA " + std::to_string(s) + " lies outside the room of AP " +
                          std::to_string(ap));
    }
    for (std::size_t m = 0; m < dep.num_aps(); ++m) {
      if (dep.sta_positions[s] == dep.ap_positions[m]) {
        throw ScenarioError("STA " + std::to_string(s) + " coincides with AP " +
                            std::to_string(m));
      }
    }
    served[ap] = true;
  }
  for (std::size_t m = 0; m < dep.num_aps(); ++m) {
    if (!served[m]) throw ScenarioError("AP " + std::to_string(m) + " has no STAs");
  }
}

Deployment load_scenario(const nlohmann::json& doc) {
  Deployment dep;
  try {
    if (!doc.is_object()) throw ScenarioError("scenario document must be an object");
    if (doc.contains("room")) {
      dep.room_width_m = doc.at("room").at("width").get<double>();
      dep.room_depth_m = doc.at("room").at("depth").get<double>();
    }
    const auto& aps = doc.at("aps");
    const auto& stas = doc.at("stas");
    if (!aps.is_array() || !stas.is_array()) {
      throw ScenarioError("\"aps\" and \"stas\" must be arrays");
    }
    const auto ap_ids = read_ids(aps, "AP");
    const auto sta_ids = read_ids(stas, "STA");
    dep.ap_positions.resize(aps.size());
    for (std::size_t i = 0; i < aps.size(); ++i) {
      dep.ap_positions[ap_ids[i]] = read_point(aps[i]);
    }
    dep.sta_positions.resize(stas.size());
    dep.association.resize(stas.size());
    for (std::size_t i = 0; i < stas.size(); ++i) {
      dep.sta_positions[sta_ids[i]] = read_point(stas[i]);
      dep.association[sta_ids[i]] = stas[i].at("ap").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed scenario document: ") + e.what());
  }
  validate_deployment(dep);
  return dep;
}

Deployment load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError("cannot parse " + path + ": " + e.what());
  }
  return load_scenario(doc);
}

nlohmann::json to_scenario_json(const Deployment& dep) {
  nlohmann::json doc;
  doc["room"] = {{"width", dep.room_width_m}, {"depth", dep.room_depth_m}};
  doc["aps"] = nlohmann::json::array();
  for (const auto& p : dep.ap_positions) doc["aps"].push_back({{"x", p.x}, {"y", p.y}});
  doc["stas"] = nlohmann::json::array();
  for (std::size_t s = 0; s < dep.total_stas(); ++s) {
    doc["stas"].push_back(
        {{"x", dep.sta_positions[s].x}, {"y", dep.sta_positions[s].y}, {"ap", dep.association[s]}});
  }
  return doc;
}

}  // namespace mapc
