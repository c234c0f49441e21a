#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapc/analysis.hpp"
#include "mapc/deployment.hpp"
#include "mapc/phy.hpp"
#include "mapc/propagation.hpp"

namespace mapc {

/// Physical and MAC parameters shared by every deployment of a run.
struct SimulationParams {
  PathLossParams path_loss;
  std::vector<double> tx_power_levels_dbm = {11.0, 14.0, 17.0, 20.0, 23.0};
  RadioParams radio;
  /// Carried for completeness; inside shared TXOPs NAV protects every
  /// slot, and nc-MAP is a single contention domain.
  double cca_threshold_dbm = -82.0;
};

enum class PowerPolicy { kFixed, kVariable, kBoth };

struct ModeSet {
  bool ncmap = true;
  bool ctdma = true;
  bool ctdma_sr = true;

  bool empty() const { return !ncmap && !ctdma && !ctdma_sr; }
};

/// Per-mode results for one deployment. SR results exist per power policy.
struct DeploymentEvaluation {
  std::optional<ThroughputReport> ncmap;
  std::optional<ThroughputReport> ctdma;
  std::optional<ThroughputReport> sr_variable;
  std::optional<ThroughputReport> sr_fixed;
};

/// Index of the first STA that cannot decode MCS 0 from its AP at maximum
/// power, if any.
std::optional<std::size_t> find_unreachable_sta(const Deployment& dep, const RssiMatrix& rssi,
                                                const RadioParams& radio);

DeploymentEvaluation evaluate_deployment(const Deployment& dep, const SimulationParams& params,
                                         const ModeSet& modes, PowerPolicy policy);
DeploymentEvaluation evaluate_deployment(const Deployment& dep, const RssiMatrix& rssi,
                                         const RadioParams& radio, const ModeSet& modes,
                                         PowerPolicy policy);

struct ExperimentSpec {
  ScenarioConfig scenario_template;
  std::size_t num_deployments = 10000;
  ModeSet modes;
  PowerPolicy power_policy = PowerPolicy::kVariable;
  std::uint64_t base_seed = 1;
  /// 0 selects std::thread::hardware_concurrency().
  std::size_t worker_count = 0;

  void validate() const;
};

struct DeploymentRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  DeploymentEvaluation eval;
  /// Gains versus nc-MAP in percent; present when both modes ran.
  std::optional<double> ctdma_gain_pct;
  std::optional<double> sr_gain_pct;
  std::optional<double> sr_fixed_gain_pct;
};

struct DiscardedDeployment {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

struct ExperimentResults {
  /// Ordered by deployment index.
  std::vector<DeploymentRecord> records;
  std::vector<DiscardedDeployment> discarded;
};

/// Deployment k uses seed base_seed + k. Output is identical for every
/// worker count. Throws ExperimentError when every deployment is discarded.
ExperimentResults run_experiment(const ExperimentSpec& spec, const SimulationParams& params);

/// Empirical CDF with plotting positions i/n and linearly interpolated
/// quantiles.
class EmpiricalCdf {
 public:
  /// Throws DomainError on empty input or NaN samples.
  explicit EmpiricalCdf(std::vector<double> samples);

  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

  /// Fraction of samples <= x.
  double probability_at_or_below(double x) const;

  /// Inverse of the CDF for p in [0, 1]: x_1 for p <= 1/n, otherwise
  /// interpolated between the points (i/n, x_i).
  double quantile(double p) const;

  /// quantile(k / 100) for k = 0..100.
  std::vector<double> percentile_table() const;

 private:
  std::vector<double> sorted_;
};

}  // namespace mapc
