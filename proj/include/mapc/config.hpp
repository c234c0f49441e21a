#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapc/deployment.hpp"
#include "mapc/montecarlo.hpp"

namespace mapc {

/// Settings for a batch sweep: one gain curve per AP count.
struct SweepSettings {
  std::vector<std::size_t> ap_counts = {2, 3, 4};
  std::size_t num_deployments = 10000;
  ModeSet modes;
  PowerPolicy power_policy = PowerPolicy::kBoth;
  std::uint64_t base_seed = 1;
  std::size_t workers = 0;
};

struct Config {
  SimulationParams sim;
  ScenarioConfig scenario;
  SweepSettings sweep;
  /// Complete configuration after defaults and overrides, as written to
  /// run manifests.
  nlohmann::json resolved;
};

/// Every knob with its default value. Config files are merged on top of
/// this document and may only use keys it contains.
nlohmann::json default_config_json();

/// Applies "dotted.key=value" to `doc`. The value is parsed as JSON when
/// possible, otherwise taken as a string. Throws ConfigError for unknown keys.
void apply_override(nlohmann::json& doc, const std::string& assignment);

Config parse_config(const nlohmann::json& doc);

/// Defaults, then the file at `path` (if any), then `overrides` in order.
Config load_config(const std::optional<std::string>& path,
                   const std::vector<std::string>& overrides = {});

const char* to_string(PowerPolicy policy);

/// Seed base for the sweep curve with `num_aps` APs, so curves draw
/// independent deployments: base_seed + (num_aps << 32).
std::uint64_t curve_base_seed(std::uint64_t base_seed, std::size_t num_aps);

}  // namespace mapc
