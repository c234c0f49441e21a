#include "mapc/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mapc/error.hpp"
#include "test_support.hpp"

namespace mapc {
namespace {

ExperimentSpec small_spec(std::size_t num_aps, std::size_t deployments) {
  ExperimentSpec spec;
  spec.scenario_template.num_aps = num_aps;
  spec.num_deployments = deployments;
  spec.power_policy = PowerPolicy::kBoth;
  spec.base_seed = 500;
  return spec;
}

TEST(EmpiricalCdf, StepProbabilities) {
  const EmpiricalCdf cdf({4, 2, 3, 1});
  EXPECT_EQ(cdf.probability_at_or_below(2.0), 0.5);
  EXPECT_EQ(cdf.probability_at_or_below(0.5), 0.0);
  EXPECT_EQ(cdf.probability_at_or_below(4.0), 1.0);
  EXPECT_EQ(std::vector<double>(cdf.sorted().begin(), cdf.sorted().end()),
            (std::vector<double>{1, 2, 3, 4}));
}

TEST(EmpiricalCdf, QuantilesInterpolateBetweenPlottingPositions) {
  const EmpiricalCdf cdf({10, 20, 30, 40});
  EXPECT_EQ(cdf.quantile(0.0), 10.0);
  EXPECT_EQ(cdf.quantile(0.25), 10.0);
  EXPECT_DOUBLE_EQ(cdf.quantile(0.375), 15.0);
  EXPECT_EQ(cdf.quantile(0.5), 20.0);
  EXPECT_EQ(cdf.quantile(1.0), 40.0);
  EXPECT_THROW(cdf.quantile(1.5), DomainError);
}

TEST(EmpiricalCdf, ConstantSamplesGiveADegenerateStep) {
  const EmpiricalCdf cdf(std::vector<double>(50, 7.5));
  for (double q : cdf.percentile_table()) EXPECT_EQ(q, 7.5);
  EXPECT_EQ(cdf.probability_at_or_below(7.4), 0.0);
  EXPECT_EQ(cdf.probability_at_or_below(7.5), 1.0);
}

TEST(EmpiricalCdf, UniformNinetiethPercentile) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> draws(10000);
  for (auto& d : draws) d = u(rng);
  EXPECT_NEAR(EmpiricalCdf(draws).quantile(0.9), 0.9, 0.01);
}

TEST(EmpiricalCdf, PercentileTableIsNondecreasing) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 10.0);
  std::vector<double> draws(777);
  for (auto& d : draws) d = g(rng);
  const auto table = EmpiricalCdf(draws).percentile_table();
  ASSERT_EQ(table.size(), 101u);
  for (std::size_t k = 1; k < table.size(); ++k) ASSERT_LE(table[k - 1], table[k]);
}

TEST(EmpiricalCdf, RejectsEmptyAndNan) {
  EXPECT_THROW(EmpiricalCdf({}), DomainError);
  EXPECT_THROW(EmpiricalCdf({1.0, std::numeric_limits<double>::quiet_NaN()}), DomainError);
}

TEST(RunExperiment, SingleDeployment) {
  const auto results = run_experiment(small_spec(2, 1), {});
  ASSERT_EQ(results.records.size(), 1u);
  EXPECT_TRUE(results.discarded.empty());
  const auto& r = results.records[0];
  EXPECT_EQ(r.seed, 500u);
  ASSERT_TRUE(r.ctdma_gain_pct && r.sr_gain_pct && r.sr_fixed_gain_pct);
  EXPECT_NEAR(*r.sr_gain_pct,
              gain_percent(*r.eval.sr_variable, *r.eval.ncmap), 1e-12);
}

TEST(RunExperiment, RecordsMatchIsolatedReruns) {
  const auto spec = small_spec(3, 5);
  const auto results = run_experiment(spec, {});
  for (const auto& r : results.records) {
    ScenarioConfig cfg = spec.scenario_template;
    cfg.seed = spec.base_seed + r.index;
    const auto eval = evaluate_deployment(generate_deployment(cfg), SimulationParams{},
                                          spec.modes, spec.power_policy);
    EXPECT_EQ(eval.sr_variable->aggregate_mbps, r.eval.sr_variable->aggregate_mbps);
    EXPECT_EQ(eval.ncmap->aggregate_mbps, r.eval.ncmap->aggregate_mbps);
  }
}

TEST(RunExperiment, IdenticalForEveryWorkerCount) {
  auto spec = small_spec(3, 24);
  spec.worker_count = 1;
  const auto reference = run_experiment(spec, {});
  for (std::size_t workers : {2u, 3u, 8u}) {
    spec.worker_count = workers;
    const auto again = run_experiment(spec, {});
    ASSERT_EQ(again.records.size(), reference.records.size());
    for (std::size_t i = 0; i < again.records.size(); ++i) {
      const auto& a = again.records[i];
      const auto& b = reference.records[i];
      ASSERT_EQ(a.index, b.index);
      ASSERT_EQ(a.seed, b.seed);
      ASSERT_EQ(a.eval.ncmap->aggregate_mbps, b.eval.ncmap->aggregate_mbps);
      ASSERT_EQ(a.eval.ctdma->aggregate_mbps, b.eval.ctdma->aggregate_mbps);
      ASSERT_EQ(a.eval.sr_variable->aggregate_mbps, b.eval.sr_variable->aggregate_mbps);
      ASSERT_EQ(a.eval.sr_fixed->aggregate_mbps, b.eval.sr_fixed->aggregate_mbps);
    }
  }
}

TEST(RunExperiment, SrNeverSlowerThanCTdma) {
  const auto results = run_experiment(small_spec(4, 40), {});
  double sr_sum = 0.0, tdma_sum = 0.0;
  for (const auto& r : results.records) {
    ASSERT_LE(r.eval.sr_variable->txop_duration_us, r.eval.ctdma->txop_duration_us + 1e-9);
    sr_sum += r.eval.sr_variable->txop_duration_us;
    tdma_sum += r.eval.ctdma->txop_duration_us;
  }
  EXPECT_LT(sr_sum, tdma_sum);
}

TEST(RunExperiment, PolicySelectsSrVariants) {
  auto spec = small_spec(2, 2);
  spec.power_policy = PowerPolicy::kFixed;
  const auto fixed = run_experiment(spec, {});
  EXPECT_TRUE(fixed.records[0].eval.sr_fixed);
  EXPECT_FALSE(fixed.records[0].eval.sr_variable);
  spec.modes = {true, false, false};
  const auto only_ncmap = run_experiment(spec, {});
  EXPECT_FALSE(only_ncmap.records[0].eval.ctdma);
  EXPECT_FALSE(only_ncmap.records[0].ctdma_gain_pct);
}

TEST(RunExperiment, DiscardsUnreachableDeployments) {
  SimulationParams params;
  params.tx_power_levels_dbm = {-60.0};
  EXPECT_THROW(run_experiment(small_spec(2, 3), params), ExperimentError);
}

TEST(RunExperiment, InvalidSpec) {
  auto spec = small_spec(2, 0);
  EXPECT_THROW(run_experiment(spec, {}), ConfigError);
  spec = small_spec(2, 1);
  spec.modes = {false, false, false};
  EXPECT_THROW(run_experiment(spec, {}), ConfigError);
}

TEST(FindUnreachable, FarStationIsReported) {
  const auto dep = testing::make_deployment({{3, 3}}, {{3.5, 3, 0}, {103, 3, 0}}, 150.0);
  const std::vector<double> powers = {23.0};
  const auto rssi = build_rssi_matrix(dep, PathLossParams{}, powers);
  EXPECT_EQ(find_unreachable_sta(dep, rssi, RadioParams{}), 1u);
}

}  // namespace
}  // namespace mapc
