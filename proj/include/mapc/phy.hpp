#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mapc {

/// One 802.11ax MCS at 80 MHz, one spatial stream.
struct McsEntry {
  int index = 0;
  /// Data bits per OFDM symbol (980 data subcarriers x bits/subcarrier x code rate).
  double bits_per_symbol = 0.0;
  double min_sinr_db = 0.0;

  friend bool operator==(const McsEntry&, const McsEntry&) = default;
};

inline constexpr std::size_t kNumMcs = 11;

/// Default SINR thresholds for MCS 0..10.
inline constexpr std::array<double, kNumMcs> kDefaultMcsThresholdsDb = {
    2.0, 5.0, 8.0, 11.0, 15.0, 18.0, 20.0, 25.0, 29.0, 31.0, 34.0};

class McsTable {
 public:
  /// Standard MCS 0..10 rates with the default thresholds.
  McsTable();
  /// Standard rates with caller-supplied thresholds (11 values).
  explicit McsTable(std::span<const double> thresholds_db);
  /// Arbitrary entries; must satisfy the contiguity and monotonicity rules.
  explicit McsTable(std::vector<McsEntry> entries);

  std::span<const McsEntry> entries() const { return entries_; }
  const McsEntry& at(int index) const;
  std::size_t size() const { return entries_.size(); }

 private:
  void validate() const;

  std::vector<McsEntry> entries_;
};

/// Highest MCS whose threshold is <= sinr; nullopt when even MCS 0 fails.
std::optional<McsEntry> select_mcs(double sinr_db, const McsTable& table);

/// Frame-timing constants, including legacy control-frame durations. All
/// values in microseconds unless noted.
struct TimingConstants {
  double legacy_preamble_us = 20.0;
  double ofdm_symbol_us = 12.8;
  double guard_interval_us = 0.8;
  double t_map_rts_us = 80.0;
  double t_map_cts_us = 62.0;
  double t_cts_timeout_us = 41.0;
  double t_map_tf_us = 76.0;
  double t_empty_slot_us = 9.0;
  double t_sifs_us = 16.0;
  double t_difs_us = 34.0;
  double t_rts_us = 28.0;
  double t_cts_us = 24.0;
  double t_ack_us = 24.0;
  int payload_bytes = 1500;
  int cw_min = 15;

  double symbol_with_gi_us() const { return ofdm_symbol_us + guard_interval_us; }
  double payload_bits() const { return 8.0 * payload_bytes; }
  /// Bianchi transmission probability for a single backoff stage.
  double tau() const { return 2.0 / (cw_min + 2.0); }

  void validate() const;
};

inline constexpr int kServiceBits = 16;
inline constexpr int kTailBits = 6;

double data_rate_mbps(const McsEntry& mcs, const TimingConstants& t = {});

/// Preamble plus whole OFDM symbols carrying service, payload and tail bits.
double ppdu_airtime_us(int payload_bytes, const McsEntry& mcs, const TimingConstants& t);

/// -174 dBm/Hz over 80 MHz plus a 7 dB noise figure.
inline constexpr double kDefaultNoiseFloorDbm = -87.96910013008056;

/// Everything needed to turn received powers into rates and airtimes.
struct RadioParams {
  McsTable mcs;
  TimingConstants timing;
  double noise_floor_dbm = kDefaultNoiseFloorDbm;
};

}  // namespace mapc
