#include "mapc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

void PathLossParams::validate() const {
  if (!(breakpoint_m > 0.0)) throw ConfigError("breakpoint_m must be positive");
  if (wall_count < 0) throw ConfigError("wall_count must be >= 0");
  if (!(center_freq_ghz > 0.0)) throw ConfigError("center_freq_ghz must be positive");
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double path_loss_db(double distance_m, const PathLossParams& params) {
  if (!(distance_m > 0.0)) {
    throw DomainError("path loss needs a positive distance, got " + std::to_string(distance_m));
  }
  const double bp = params.breakpoint_m;
  const double near = std::min(distance_m, bp);
  const double beyond = distance_m > bp ? 35.0 * std::log10(distance_m / bp) : 0.0;
  return 40.05 + 20.0 * std::log10(near * params.center_freq_ghz / 2.4) + beyond +
         7.0 * params.wall_count;
}

RssiMatrix::RssiMatrix(std::size_t num_stas, std::size_t num_aps,
                       std::vector<double> tx_power_levels_dbm)
    : num_stas_(num_stas),
      num_aps_(num_aps),
      levels_(std::move(tx_power_levels_dbm)),
      rssi_(num_stas * num_aps * levels_.size(), 0.0),
      rssi_mw_(rssi_.size(), 0.0) {
  if (levels_.empty()) throw ConfigError("at least one transmit power level is required");
  if (!std::is_sorted(levels_.begin(), levels_.end()) ||
      std::adjacent_find(levels_.begin(), levels_.end()) != levels_.end()) {
    throw ConfigError("transmit power levels must be strictly ascending");
  }
}

void RssiMatrix::set(std::size_t sta, std::size_t ap, std::size_t level, double dbm) {
  const auto i = index(sta, ap, level);
  rssi_[i] = dbm;
  rssi_mw_[i] = dbm_to_mw(dbm);
}

RssiMatrix build_rssi_matrix(const Deployment& dep, const PathLossParams& params,
                             std::span<const double> tx_power_levels_dbm) {
  params.validate();
  RssiMatrix rssi(dep.total_stas(), dep.num_aps(),
                  {tx_power_levels_dbm.begin(), tx_power_levels_dbm.end()});
  for (std::size_t s = 0; s < dep.total_stas(); ++s) {
    for (std::size_t a = 0; a < dep.num_aps(); ++a) {
      const double d = distance(dep.sta_positions[s], dep.ap_positions[a]);
      if (!(d > 0.0)) {
        throw DomainError("STA " + std::to_string(s) + " coincides with AP " + std::to_string(a));
      }
      const double loss = path_loss_db(d, params);
      for (std::size_t p = 0; p < rssi.num_levels(); ++p) {
        rssi.set(s, a, p, tx_power_levels_dbm[p] - loss);
      }
    }
  }
  return rssi;
}

double sinr_db(double target_rssi_dbm, std::span<const double> interferer_rssis_dbm,
               double noise_floor_dbm) {
  if (interferer_rssis_dbm.empty()) return target_rssi_dbm - noise_floor_dbm;
  double denom_mw = dbm_to_mw(noise_floor_dbm);
  for (double i : interferer_rssis_dbm) denom_mw += dbm_to_mw(i);
  return target_rssi_dbm - mw_to_dbm(denom_mw);
}

}  // namespace mapc
