#include "mapc/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mapc/error.hpp"
#include "mapc/report.hpp"

namespace mapc {
namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Config, DefaultsMatchBuiltInConstants) {
  const auto cfg = load_config(std::nullopt);
  EXPECT_NEAR(cfg.sim.radio.noise_floor_dbm, kDefaultNoiseFloorDbm, 1e-12);
  EXPECT_EQ(cfg.sim.tx_power_levels_dbm, (std::vector<double>{11, 14, 17, 20, 23}));
  EXPECT_EQ(cfg.sim.path_loss.wall_count, 3);
  EXPECT_EQ(cfg.sim.radio.timing.t_map_tf_us, 76.0);
  EXPECT_EQ(cfg.sweep.num_deployments, 10000u);
  EXPECT_EQ(cfg.sweep.ap_counts, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(cfg.sweep.power_policy, PowerPolicy::kBoth);
  EXPECT_EQ(cfg.sim.radio.mcs.at(4).min_sinr_db, 15.0);
}

TEST(Config, OverridesTakePrecedence) {
  const auto cfg = load_config(std::nullopt, {"experiment.num_deployments=100",
                                              "radio.noise_floor_dbm=-90",
                                              "experiment.power_policy=fixed"});
  EXPECT_EQ(cfg.sweep.num_deployments, 100u);
  EXPECT_EQ(cfg.sim.radio.noise_floor_dbm, -90.0);
  EXPECT_EQ(cfg.sweep.power_policy, PowerPolicy::kFixed);
  EXPECT_EQ(cfg.resolved["experiment"]["num_deployments"], 100);
}

TEST(Config, FileThenOverrides) {
  const auto path = write_temp("mapc_config_test.json",
                               R"({"experiment": {"num_deployments": 7, "base_seed": 9}})");
  const auto cfg = load_config(path.string(), {"experiment.base_seed=11"});
  EXPECT_EQ(cfg.sweep.num_deployments, 7u);
  EXPECT_EQ(cfg.sweep.base_seed, 11u);
  fs::remove(path);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(load_config(std::nullopt, {"radio.bogus=1"}), ConfigError);
  EXPECT_THROW(load_config(std::nullopt, {"no_equals_sign"}), ConfigError);
  EXPECT_THROW(load_config(std::nullopt, {"experiment.power_policy=sometimes"}), ConfigError);
  EXPECT_THROW(load_config(std::nullopt, {"experiment.modes=[\"x\"]"}), ConfigError);
  EXPECT_THROW(load_config(std::nullopt, {"experiment.num_deployments=0"}), ConfigError);
  EXPECT_THROW(load_config(std::nullopt, {"radio.mcs_thresholds_db=[1,2]"}), ConfigError);
  const auto path = write_temp("mapc_config_bad.json", R"({"timing": {"typo_us": 3}})");
  EXPECT_THROW(load_config(path.string()), ConfigError);
  fs::remove(path);
}

TEST(Config, ShippedDefaultFileMatchesBuiltIns) {
  const auto shipped = load_config(std::string(MAPC_CONFIG_DIR) + "/default.json");
  EXPECT_EQ(shipped.resolved, load_config(std::nullopt).resolved);
}

TEST(Config, CurveSeedsAreDisjoint) {
  EXPECT_EQ(curve_base_seed(1, 2), 1 + (std::uint64_t{2} << 32));
  EXPECT_NE(curve_base_seed(1, 3), curve_base_seed(1, 4));
}

TEST(Report, DeploymentCsvLeavesMissingModesEmpty) {
  ExperimentResults results;
  DeploymentRecord rec;
  rec.index = 3;
  rec.seed = 42;
  ThroughputReport nc;
  nc.aggregate_mbps = 40.0;
  rec.eval.ncmap = nc;
  results.records.push_back(rec);
  std::ostringstream os;
  write_deployments_csv(os, results);
  std::istringstream lines(os.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header,
            "index,seed,ncmap_mbps,ctdma_mbps,sr_mbps,sr_fixed_mbps,ctdma_gain_pct,sr_gain_pct,"
            "sr_fixed_gain_pct,ctdma_txop_us,sr_txop_us,sr_fixed_txop_us,ctdma_slots,sr_slots,"
            "sr_fixed_slots");
  EXPECT_EQ(row, "3,42,40.000000,,,,,,,,,,,,");
}

TEST(Report, PercentileCsvHasOneRowPerPercent) {
  std::ostringstream os;
  write_percentile_csv(os, {{"a", {1.0, 2.0}}, {"empty", {}}});
  std::istringstream lines(os.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "percentile,a");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 101);
  EXPECT_NE(os.str().find("\n100,2.000000\n"), std::string::npos);
}

TEST(Report, UnwritablePathIsAnIoError) {
  EXPECT_THROW(open_output("/nonexistent-dir/x.csv"), IoError);
}

}  // namespace
}  // namespace mapc
