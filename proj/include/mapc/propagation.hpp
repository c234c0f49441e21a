#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mapc/deployment.hpp"

namespace mapc {

/// TGax enterprise path-loss parameters.
struct PathLossParams {
  double breakpoint_m = 10.0;
  int wall_count = 3;
  double center_freq_ghz = 5.0;

  void validate() const;
};

/// Thermal noise over `bandwidth_hz` plus the receiver noise figure.
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// PL = 40.05 + 20 log10(min(d, Bp) fc / 2.4) + P' + 7 Wn, with
/// P' = 35 log10(d / Bp) beyond the breakpoint. Throws DomainError for d <= 0.
double path_loss_db(double distance_m, const PathLossParams& params);

/// Received power at every STA from every AP at every allowed power level.
class RssiMatrix {
 public:
  RssiMatrix() = default;
  RssiMatrix(std::size_t num_stas, std::size_t num_aps, std::vector<double> tx_power_levels_dbm);

  std::size_t num_stas() const { return num_stas_; }
  std::size_t num_aps() const { return num_aps_; }
  std::size_t num_levels() const { return levels_.size(); }
  std::span<const double> tx_power_levels_dbm() const { return levels_; }
  std::size_t max_level() const { return levels_.size() - 1; }

  double rssi_dbm(std::size_t sta, std::size_t ap, std::size_t level) const {
    return rssi_[index(sta, ap, level)];
  }
  /// Same value in milliwatts, cached for interference sums.
  double rssi_mw(std::size_t sta, std::size_t ap, std::size_t level) const {
    return rssi_mw_[index(sta, ap, level)];
  }

  void set(std::size_t sta, std::size_t ap, std::size_t level, double dbm);

 private:
  std::size_t index(std::size_t sta, std::size_t ap, std::size_t level) const {
    return (sta * num_aps_ + ap) * levels_.size() + level;
  }

  std::size_t num_stas_ = 0;
  std::size_t num_aps_ = 0;
  std::vector<double> levels_;
  std::vector<double> rssi_;
  std::vector<double> rssi_mw_;
};

/// Power levels must be strictly ascending. Throws DomainError when a STA
/// coincides with an AP.
RssiMatrix build_rssi_matrix(const Deployment& dep, const PathLossParams& params,
                             std::span<const double> tx_power_levels_dbm);

/// Target power over interference plus noise, all summed in milliwatts.
double sinr_db(double target_rssi_dbm, std::span<const double> interferer_rssis_dbm,
               double noise_floor_dbm);

}  // namespace mapc
