#include "mapc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <variant>

#include "mapc/error.hpp"
#include "mapc/scheduler.hpp"

namespace mapc {

std::optional<std::size_t> find_unreachable_sta(const Deployment& dep, const RssiMatrix& rssi,
                                                const RadioParams& radio) {
  const std::size_t top = rssi.max_level();
  for (std::size_t s = 0; s < dep.total_stas(); ++s) {
    const double snr = sinr_db(rssi.rssi_dbm(s, dep.association[s], top), {}, radio.noise_floor_dbm);
    if (!select_mcs(snr, radio.mcs)) return s;
  }
  return std::nullopt;
}

DeploymentEvaluation evaluate_deployment(const Deployment& dep, const SimulationParams& params,
                                         const ModeSet& modes, PowerPolicy policy) {
  const auto rssi = build_rssi_matrix(dep, params.path_loss, params.tx_power_levels_dbm);
  return evaluate_deployment(dep, rssi, params.radio, modes, policy);
}

DeploymentEvaluation evaluate_deployment(const Deployment& dep, const RssiMatrix& rssi,
                                         const RadioParams& radio, const ModeSet& modes,
                                         PowerPolicy policy) {
  DeploymentEvaluation eval;
  if (modes.ncmap) eval.ncmap = throughput_ncmap(dep, rssi, radio);
  if (modes.ctdma) {
    eval.ctdma = throughput_coordinated(build_ctdma_schedule(dep, rssi, radio), dep.total_stas(), radio);
  }
  if (modes.ctdma_sr) {
    auto run_sr = [&](bool fixed) {
      const auto combos = enumerate_combinations(dep, rssi, radio, {.fixed_power = fixed});
      return throughput_coordinated(greedy_select(combos, dep), dep.total_stas(), radio);
    };
    if (policy != PowerPolicy::kFixed) eval.sr_variable = run_sr(false);
    if (policy != PowerPolicy::kVariable) eval.sr_fixed = run_sr(true);
  }
  return eval;
}

void ExperimentSpec::validate() const {
  scenario_template.validate();
  if (num_deployments < 1) throw ConfigError("num_deployments must be >= 1");
  if (modes.empty()) throw ConfigError("at least one mode is required");
}

namespace {

using Outcome = std::variant<std::monostate, DeploymentRecord, DiscardedDeployment>;

Outcome run_one(const ExperimentSpec& spec, const SimulationParams& params, std::size_t index) {
  ScenarioConfig cfg = spec.scenario_template;
  cfg.seed = spec.base_seed + index;
  const Deployment dep = generate_deployment(cfg);
  const auto rssi = build_rssi_matrix(dep, params.path_loss, params.tx_power_levels_dbm);
  if (const auto sta = find_unreachable_sta(dep, rssi, params.radio)) {
    return DiscardedDeployment{index, cfg.seed,
                               "STA " + std::to_string(*sta) + " infeasible at maximum power"};
  }
  DeploymentRecord rec;
  rec.index = index;
  rec.seed = cfg.seed;
  rec.eval = evaluate_deployment(dep, rssi, params.radio, spec.modes, spec.power_policy);
  if (rec.eval.ncmap) {
    if (rec.eval.ctdma) rec.ctdma_gain_pct = gain_percent(*rec.eval.ctdma, *rec.eval.ncmap);
    if (rec.eval.sr_variable) rec.sr_gain_pct = gain_percent(*rec.eval.sr_variable, *rec.eval.ncmap);
    if (rec.eval.sr_fixed) rec.sr_fixed_gain_pct = gain_percent(*rec.eval.sr_fixed, *rec.eval.ncmap);
  }
  return rec;
}

}  // namespace

ExperimentResults run_experiment(const ExperimentSpec& spec, const SimulationParams& params) {
  spec.validate();
  std::size_t workers = spec.worker_count;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, spec.num_deployments);

  std::vector<Outcome> outcomes(spec.num_deployments);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= spec.num_deployments) return;
      try {
        outcomes[i] = run_one(spec, params, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = spec.num_deployments;
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResults results;
  for (auto& o : outcomes) {
    if (auto* rec = std::get_if<DeploymentRecord>(&o)) {
      results.records.push_back(std::move(*rec));
    } else if (auto* d = std::get_if<DiscardedDeployment>(&o)) {
      results.discarded.push_back(std::move(*d));
    }
  }
  if (results.records.empty()) {
    throw ExperimentError("all " + std::to_string(spec.num_deployments) +
                          " deployments were discarded");
  }
  return results;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("CDF of an empty sample");
  if (std::any_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isnan(v); })) {
    throw DomainError("CDF sample contains NaN");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::probability_at_or_below(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile probability must lie in [0, 1]");
  const double n = static_cast<double>(sorted_.size());
  const double h = p * n;  // 1-based position
  if (h <= 1.0) return sorted_.front();
  if (h >= n) return sorted_.back();
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  const double a = sorted_[lo - 1];
  const double b = sorted_[lo];
  return a + frac * (b - a);
}

std::vector<double> EmpiricalCdf::percentile_table() const {
  std::vector<double> table;
  table.reserve(101);
  for (int k = 0; k <= 100; ++k) table.push_back(quantile(k / 100.0));
  return table;
}

}  // namespace mapc
