#include "mapc/config.hpp"

#include <fstream>

#include "mapc/error.hpp"
#include "mapc/phy.hpp"
#include "mapc/propagation.hpp"

namespace mapc {

using nlohmann::json;

namespace {

void check_known_keys(const json& doc, const json& schema, const std::string& prefix) {
  if (!doc.is_object()) return;
  for (const auto& [key, value] : doc.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!schema.contains(key)) throw ConfigError("unknown config key \"" + path + "\"");
    if (schema.at(key).is_object()) check_known_keys(value, schema.at(key), path);
  }
}

ModeSet parse_modes(const json& list) {
  ModeSet modes{false, false, false};
  for (const auto& m : list) {
    const auto name = m.get<std::string>();
    if (name == "nc-MAP") {
      modes.ncmap = true;
    } else if (name == "c-TDMA") {
      modes.ctdma = true;
    } else if (name == "c-TDMA/SR") {
      modes.ctdma_sr = true;
    } else {
      throw ConfigError("unknown mode \"" + name + "\"");
    }
  }
  return modes;
}

PowerPolicy parse_policy(const std::string& name) {
  if (name == "fixed") return PowerPolicy::kFixed;
  if (name == "variable") return PowerPolicy::kVariable;
  if (name == "both") return PowerPolicy::kBoth;
  throw ConfigError("power_policy must be fixed, variable or both, got \"" + name + "\"");
}

}  // namespace

const char* to_string(PowerPolicy policy) {
  switch (policy) {
    case PowerPolicy::kFixed:
      return "fixed";
    case PowerPolicy::kVariable:
      return "variable";
    case PowerPolicy::kBoth:
      return "both";
  }
  return "?";
}

std::uint64_t curve_base_seed(std::uint64_t base_seed, std::size_t num_aps) {
  return base_seed + (static_cast<std::uint64_t>(num_aps) << 32);
}

json default_config_json() {
  const TimingConstants t;
  json thresholds = json::array();
  for (double v : kDefaultMcsThresholdsDb) thresholds.push_back(v);
  return {
      {"path_loss", {{"breakpoint_m", 10.0}, {"wall_count", 3}, {"center_freq_ghz", 5.0}}},
      {"radio",
       {{"tx_power_levels_dbm", {11.0, 14.0, 17.0, 20.0, 23.0}},
        {"bandwidth_mhz", 80.0},
        {"noise_figure_db", 7.0},
        // null: derive from bandwidth and noise figure.
        {"noise_floor_dbm", nullptr},
        {"cca_threshold_dbm", -82.0},
        {"mcs_thresholds_db", thresholds}}},
      {"timing",
       {{"legacy_preamble_us", t.legacy_preamble_us},
        {"ofdm_symbol_us", t.ofdm_symbol_us},
        {"guard_interval_us", t.guard_interval_us},
        {"t_map_rts_us", t.t_map_rts_us},
        {"t_map_cts_us", t.t_map_cts_us},
        {"t_cts_timeout_us", t.t_cts_timeout_us},
        {"t_map_tf_us", t.t_map_tf_us},
        {"t_empty_slot_us", t.t_empty_slot_us},
        {"t_sifs_us", t.t_sifs_us},
        {"t_difs_us", t.t_difs_us},
        {"t_rts_us", t.t_rts_us},
        {"t_cts_us", t.t_cts_us},
        {"t_ack_us", t.t_ack_us},
        {"payload_bytes", t.payload_bytes},
        {"cw_min", t.cw_min}}},
      {"scenario",
       {{"num_aps", 4},
        {"stas_per_ap", 3},
        {"room_width_m", 6.0},
        {"room_depth_m", 6.0},
        {"seed", 0},
        {"sharing_ap_index", 0}}},
      {"experiment",
       {{"ap_counts", {2, 3, 4}},
        {"num_deployments", 10000},
        {"modes", {"nc-MAP", "c-TDMA", "c-TDMA/SR"}},
        {"power_policy", "both"},
        {"base_seed", 1},
        {"workers", 0}}},
  };
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override must look like key=value, got \"" + assignment + "\"");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  std::string pointer;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    pointer += "/" + key.substr(start, dot - start);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  const json::json_pointer ptr(pointer);
  if (!doc.contains(ptr)) throw ConfigError("unknown config key \"" + key + "\"");
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  doc[ptr] = std::move(value);
}

Config parse_config(const json& doc) {
  Config cfg;
  cfg.resolved = doc;
  try {
    const auto& pl = doc.at("path_loss");
    cfg.sim.path_loss.breakpoint_m = pl.at("breakpoint_m").get<double>();
    cfg.sim.path_loss.wall_count = pl.at("wall_count").get<int>();
    cfg.sim.path_loss.center_freq_ghz = pl.at("center_freq_ghz").get<double>();
    cfg.sim.path_loss.validate();

    const auto& radio = doc.at("radio");
    cfg.sim.tx_power_levels_dbm = radio.at("tx_power_levels_dbm").get<std::vector<double>>();
    if (!radio.contains("noise_floor_dbm") || radio.at("noise_floor_dbm").is_null()) {
      cfg.sim.radio.noise_floor_dbm = thermal_noise_dbm(radio.at("bandwidth_mhz").get<double>() * 1e6,
                                                        radio.at("noise_figure_db").get<double>());
      cfg.resolved["radio"]["noise_floor_dbm"] = cfg.sim.radio.noise_floor_dbm;
    } else {
      cfg.sim.radio.noise_floor_dbm = radio.at("noise_floor_dbm").get<double>();
    }
    cfg.sim.cca_threshold_dbm = radio.at("cca_threshold_dbm").get<double>();
    const auto thresholds = radio.at("mcs_thresholds_db").get<std::vector<double>>();
    cfg.sim.radio.mcs = McsTable(thresholds);
    // Validates the levels.
    RssiMatrix(0, 0, cfg.sim.tx_power_levels_dbm);

    const auto& tm = doc.at("timing");
    auto& t = cfg.sim.radio.timing;
    t.legacy_preamble_us = tm.at("legacy_preamble_us").get<double>();
    t.ofdm_symbol_us = tm.at("ofdm_symbol_us").get<double>();
    t.guard_interval_us = tm.at("guard_interval_us").get<double>();
    t.t_map_rts_us = tm.at("t_map_rts_us").get<double>();
    t.t_map_cts_us = tm.at("t_map_cts_us").get<double>();
    t.t_cts_timeout_us = tm.at("t_cts_timeout_us").get<double>();
    t.t_map_tf_us = tm.at("t_map_tf_us").get<double>();
    t.t_empty_slot_us = tm.at("t_empty_slot_us").get<double>();
    t.t_sifs_us = tm.at("t_sifs_us").get<double>();
    t.t_difs_us = tm.at("t_difs_us").get<double>();
    t.t_rts_us = tm.at("t_rts_us").get<double>();
    t.t_cts_us = tm.at("t_cts_us").get<double>();
    t.t_ack_us = tm.at("t_ack_us").get<double>();
    t.payload_bytes = tm.at("payload_bytes").get<int>();
    t.cw_min = tm.at("cw_min").get<int>();
    t.validate();

    const auto& sc = doc.at("scenario");
    cfg.scenario.num_aps = sc.at("num_aps").get<std::size_t>();
    cfg.scenario.stas_per_ap = sc.at("stas_per_ap").get<std::size_t>();
    cfg.scenario.room_width_m = sc.at("room_width_m").get<double>();
    cfg.scenario.room_depth_m = sc.at("room_depth_m").get<double>();
    cfg.scenario.seed = sc.at("seed").get<std::uint64_t>();
    cfg.scenario.sharing_ap_index = sc.at("sharing_ap_index").get<std::size_t>();
    cfg.scenario.validate();

    const auto& ex = doc.at("experiment");
    cfg.sweep.ap_counts = ex.at("ap_counts").get<std::vector<std::size_t>>();
    if (cfg.sweep.ap_counts.empty()) throw ConfigError("experiment.ap_counts is empty");
    for (auto m : cfg.sweep.ap_counts) {
      if (m < 1) throw ConfigError("experiment.ap_counts entries must be >= 1");
    }
    cfg.sweep.num_deployments = ex.at("num_deployments").get<std::size_t>();
    if (cfg.sweep.num_deployments < 1) throw ConfigError("num_deployments must be >= 1");
    cfg.sweep.modes = parse_modes(ex.at("modes"));
    if (cfg.sweep.modes.empty()) throw ConfigError("experiment.modes is empty");
    cfg.sweep.power_policy = parse_policy(ex.at("power_policy").get<std::string>());
    cfg.sweep.base_seed = ex.at("base_seed").get<std::uint64_t>();
    cfg.sweep.workers = ex.at("workers").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

Config load_config(const std::optional<std::string>& path, const std::vector<std::string>& overrides) {
  json doc = default_config_json();
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open config file " + *path);
    json user;
    try {
      in >> user;
    } catch (const json::exception& e) {
      throw ConfigError("cannot parse " + *path + ": " + e.what());
    }
    if (!user.is_object()) throw ConfigError("config root must be an object");
    check_known_keys(user, doc, "");
    doc.merge_patch(user);
  }
  for (const auto& o : overrides) apply_override(doc, o);
  return parse_config(doc);
}

}  // namespace mapc
