// Command-line driver: toy scenarios, Monte Carlo sweeps and scheduler dumps.
//
// Exit codes: 0 success, 1 usage, 2 config, 3 scenario, 4 runtime, 5 file I/O.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mapc/analysis.hpp"
#include "mapc/config.hpp"
#include "mapc/deployment.hpp"
#include "mapc/error.hpp"
#include "mapc/montecarlo.hpp"
#include "mapc/report.hpp"
#include "mapc/scheduler.hpp"

#ifndef MAPC_VERSION
#define MAPC_VERSION "unknown"
#endif

namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kScenario = 3,
  kRuntime = 4,
  kIo = 5,
};

struct Options {
  std::optional<std::string> config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> deployments;
  std::string scenario_path;
  std::size_t top = 20;
  bool fixed_power = false;
};

mapc::Config resolve_config(const Options& opt) {
  auto overrides = opt.overrides;
  if (opt.workers) overrides.push_back("experiment.workers=" + std::to_string(*opt.workers));
  if (opt.deployments) {
    overrides.push_back("experiment.num_deployments=" + std::to_string(*opt.deployments));
  }
  return mapc::load_config(opt.config_path, overrides);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw mapc::IoError("cannot create output directory " + dir);
}

int run_toy(const Options& opt) {
  const auto cfg = resolve_config(opt);
  const auto dep = mapc::load_scenario_file(opt.scenario_path);
  const auto eval = mapc::evaluate_deployment(dep, cfg.sim, {}, mapc::PowerPolicy::kVariable);

  const std::string name = fs::path(opt.scenario_path).stem().string();
  std::printf("scenario %s: %zu APs, %zu STAs\n", name.c_str(), dep.num_aps(), dep.total_stas());
  std::printf("%-10s %16s %12s %8s\n", "mode", "throughput[Mbps]", "TXOP[us]", "slots");
  const std::pair<const char*, const mapc::ThroughputReport*> rows[] = {
      {"nc-MAP", &*eval.ncmap}, {"c-TDMA", &*eval.ctdma}, {"c-TDMA/SR", &*eval.sr_variable}};
  for (const auto& [mode, r] : rows) {
    std::printf("%-10s %16.3f %12.1f %8zu\n", mode, r->aggregate_mbps, r->txop_duration_us,
                r->num_coordinated_slots);
  }
  std::printf("c-TDMA/SR vs c-TDMA ratio: %.3f\n",
              eval.sr_variable->aggregate_mbps / eval.ctdma->aggregate_mbps);

  if (!opt.out_dir.empty()) {
    ensure_dir(opt.out_dir);
    auto out = mapc::open_output(fs::path(opt.out_dir) / ("toy_" + name + ".csv"));
    out << "mode,throughput_mbps,txop_us,coordinated_slots\n";
    for (const auto& [mode, r] : rows) {
      out << mode << ',' << mapc::format_number(r->aggregate_mbps) << ','
          << mapc::format_number(r->txop_duration_us) << ',' << r->num_coordinated_slots << '\n';
    }
  }
  return kOk;
}

int run_sweep(const Options& opt) {
  const auto cfg = resolve_config(opt);
  const std::string out_dir = opt.out_dir.empty() ? "results" : opt.out_dir;
  ensure_dir(out_dir);
  const fs::path dir(out_dir);

  nlohmann::json manifest;
  manifest["schema_version"] = mapc::kCsvSchemaVersion;
  manifest["version"] = MAPC_VERSION;
  manifest["config"] = cfg.resolved;
  manifest["seed_rule"] = "deployment k of the curve with M APs uses base_seed + (M << 32) + k";
  manifest["curves"] = nlohmann::json::array();

  for (std::size_t m : cfg.sweep.ap_counts) {
    mapc::ExperimentSpec spec;
    spec.scenario_template = cfg.scenario;
    spec.scenario_template.num_aps = m;
    spec.scenario_template.sharing_ap_index = 0;
    spec.num_deployments = cfg.sweep.num_deployments;
    spec.modes = cfg.sweep.modes;
    spec.power_policy = cfg.sweep.power_policy;
    spec.base_seed = mapc::curve_base_seed(cfg.sweep.base_seed, m);
    spec.worker_count = cfg.sweep.workers;

    const auto started = std::chrono::steady_clock::now();
    const auto results = mapc::run_experiment(spec, cfg.sim);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::fprintf(stderr, "M=%zu: %zu deployments retained, %zu discarded (%.1f s)\n", m,
                 results.records.size(), results.discarded.size(), secs);
    for (const auto& d : results.discarded) {
      std::fprintf(stderr, "  discarded deployment %zu (seed %llu): %s\n", d.index,
                   static_cast<unsigned long long>(d.seed), d.reason.c_str());
    }

    const std::string suffix = "_M" + std::to_string(m) + ".csv";
    std::vector<std::string> files;
    auto emit = [&](const std::string& stem, auto&& writer) {
      const std::string file = stem + suffix;
      auto out = mapc::open_output(dir / file);
      writer(out);
      if (!out) throw mapc::IoError("write failed for " + file);
      files.push_back(file);
    };
    using mapc::Metric;
    emit("deployments", [&](std::ostream& os) { mapc::write_deployments_csv(os, results); });
    if (!results.discarded.empty()) {
      emit("discarded", [&](std::ostream& os) { mapc::write_discards_csv(os, results); });
    }
    emit("gain_cdf", [&](std::ostream& os) {
      mapc::write_percentile_csv(os, {{"ctdma_gain_pct", collect(results, Metric::kCTdmaGain)},
                                      {"sr_gain_pct", collect(results, Metric::kSrGain)}});
    });
    emit("power_cdf", [&](std::ostream& os) {
      mapc::write_percentile_csv(os,
                                 {{"sr_fixed_gain_pct", collect(results, Metric::kSrFixedGain)},
                                  {"sr_variable_gain_pct", collect(results, Metric::kSrGain)}});
    });
    emit("txop_cdf", [&](std::ostream& os) {
      mapc::write_percentile_csv(os, {{"ctdma_txop_us", collect(results, Metric::kCTdmaTxop)},
                                      {"sr_txop_us", collect(results, Metric::kSrTxop)},
                                      {"sr_fixed_txop_us", collect(results, Metric::kSrFixedTxop)}});
    });

    manifest["curves"].push_back({{"num_aps", m},
                                  {"stas_per_ap", spec.scenario_template.stas_per_ap},
                                  {"base_seed", spec.base_seed},
                                  {"num_deployments", spec.num_deployments},
                                  {"retained", results.records.size()},
                                  {"discarded", results.discarded.size()},
                                  {"files", files}});
  }

  auto out = mapc::open_output(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
  return kOk;
}

int run_schedule_debug(const Options& opt) {
  const auto cfg = resolve_config(opt);
  const auto dep = mapc::load_scenario_file(opt.scenario_path);
  const auto rssi = mapc::build_rssi_matrix(dep, cfg.sim.path_loss, cfg.sim.tx_power_levels_dbm);
  const auto combos =
      mapc::enumerate_combinations(dep, rssi, cfg.sim.radio, {.fixed_power = opt.fixed_power});
  std::printf("%zu feasible combinations\n", combos.size());
  std::fputs(mapc::format_combination_table(combos, dep, opt.top).c_str(), stdout);

  std::vector<mapc::GreedyStep> trace;
  const auto schedule = mapc::greedy_select(combos, dep, &trace);
  std::printf("\ngreedy trace:\n");
  std::size_t hidden = 0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& step = trace[i];
    if (step.accepted) {
      std::printf("  c%zu accepted\n", i + 1);
    } else if (opt.top == 0 || i < opt.top) {
      std::printf("  c%zu skipped (STA%zu already scheduled)\n", i + 1, step.conflict_sta + 1);
    } else {
      ++hidden;
    }
  }
  if (hidden > 0) std::printf("  (%zu more skipped beyond c%zu)\n", hidden, opt.top);
  std::printf("\nschedule (%zu slots):\n", schedule.slots.size());
  for (const auto& slot : schedule.slots) {
    std::printf("  slot %.1f us, alpha %.2f Mbps:", slot.slot_duration_us, slot.alpha_mbps);
    for (const auto& l : slot.links) {
      std::printf(" AP%zu->STA%zu %g dBm MCS%d (%.1f dB)", l.ap + 1, l.sta + 1, l.tx_power_dbm,
                  l.mcs_index, l.sinr_db);
    }
    std::printf("\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-AP TXOP sharing simulator (nc-MAP, c-TDMA, c-TDMA/SR)"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "Output directory");
    sub->add_option("--set", opt.overrides, "Config override key=value (repeatable)");
  };

  auto* toy = app.add_subcommand("toy", "Evaluate the three modes on a scenario file");
  add_common(toy);
  toy->add_option("--scenario", opt.scenario_path, "Scenario JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over random deployments");
  add_common(sweep);
  sweep->add_option("--workers", opt.workers, "Worker threads (0 = all cores)");
  sweep->add_option("--deployments", opt.deployments, "Deployments per curve");

  auto* debug = app.add_subcommand("schedule-debug", "Ranked combination listing and greedy trace");
  add_common(debug);
  debug->add_option("--scenario", opt.scenario_path, "Scenario JSON file")->required();
  debug->add_option("--top", opt.top, "Ranked rows to print (0 = all)");
  debug->add_flag("--fixed-power", opt.fixed_power, "Only the maximum power level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*toy) return run_toy(opt);
    if (*sweep) return run_sweep(opt);
    if (*debug) return run_schedule_debug(opt);
  } catch (const mapc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const mapc::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << '\n';
    return kScenario;
  } catch (const mapc::IoError& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
