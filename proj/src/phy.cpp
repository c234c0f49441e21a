#include "mapc/phy.hpp"

#include <cmath>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

namespace {

constexpr double kDataSubcarriers = 980.0;

// Bits per subcarrier and code rate for HE MCS 0..10.
constexpr std::array<std::pair<double, double>, kNumMcs> kModulation = {{
    {1, 1.0 / 2},   // BPSK
    {2, 1.0 / 2},   // QPSK
    {2, 3.0 / 4},
    {4, 1.0 / 2},   // 16-QAM
    {4, 3.0 / 4},
    {6, 2.0 / 3},   // 64-QAM
    {6, 3.0 / 4},
    {6, 5.0 / 6},
    {8, 3.0 / 4},   // 256-QAM
    {8, 5.0 / 6},
    {10, 3.0 / 4},  // 1024-QAM
}};

std::vector<McsEntry> standard_entries(std::span<const double> thresholds_db) {
  if (thresholds_db.size() != kNumMcs) {
    throw ConfigError("MCS threshold table needs " + std::to_string(kNumMcs) + " values, got " +
                      std::to_string(thresholds_db.size()));
  }
  std::vector<McsEntry> entries;
  for (std::size_t i = 0; i < kNumMcs; ++i) {
    const auto [bits, rate] = kModulation[i];
    entries.push_back({static_cast<int>(i), kDataSubcarriers * bits * rate, thresholds_db[i]});
  }
  return entries;
}

}  // namespace

McsTable::McsTable() : McsTable(std::span<const double>(kDefaultMcsThresholdsDb)) {}

McsTable::McsTable(std::span<const double> thresholds_db)
    : entries_(standard_entries(thresholds_db)) {
  validate();
}

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries)) { validate(); }

void McsTable::validate() const {
  if (entries_.empty()) throw ConfigError("MCS table is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.index != static_cast<int>(i)) throw ConfigError("MCS indices must be contiguous from 0");
    if (!(e.bits_per_symbol > 0.0)) throw ConfigError("bits_per_symbol must be positive");
    if (i > 0) {
      if (!(e.bits_per_symbol > entries_[i - 1].bits_per_symbol)) {
        throw ConfigError("bits_per_symbol must increase with MCS index");
      }
      if (!(e.min_sinr_db > entries_[i - 1].min_sinr_db)) {
        throw ConfigError("MCS thresholds must increase with MCS index");
      }
    }
  }
}

const McsEntry& McsTable::at(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= entries_.size()) {
    throw DomainError("no MCS " + std::to_string(index));
  }
  return entries_[static_cast<std::size_t>(index)];
}

std::optional<McsEntry> select_mcs(double sinr_db, const McsTable& table) {
  std::optional<McsEntry> best;
  for (const auto& e : table.entries()) {
    if (e.min_sinr_db <= sinr_db) {
      best = e;
    } else {
      break;
    }
  }
  return best;
}

void TimingConstants::validate() const {
  const double durations[] = {legacy_preamble_us, ofdm_symbol_us, guard_interval_us,
                              t_map_rts_us,       t_map_cts_us,   t_cts_timeout_us,
                              t_map_tf_us,        t_empty_slot_us, t_sifs_us,
                              t_difs_us,          t_rts_us,       t_cts_us,
                              t_ack_us};
  for (double d : durations) {
    if (!(d > 0.0)) throw ConfigError("timing durations must be positive");
  }
  if (payload_bytes <= 0) throw ConfigError("payload_bytes must be positive");
  if (cw_min < 0) throw ConfigError("cw_min must be >= 0");
}

double data_rate_mbps(const McsEntry& mcs, const TimingConstants& t) {
  return mcs.bits_per_symbol / t.symbol_with_gi_us();
}

double ppdu_airtime_us(int payload_bytes, const McsEntry& mcs, const TimingConstants& t) {
  if (payload_bytes <= 0) throw DomainError("payload must be positive");
  const double bits = kServiceBits + 8.0 * payload_bytes + kTailBits;
  // Guard against 4900 * 3 style products landing a hair above an integer.
  const double symbols = std::ceil(bits / mcs.bits_per_symbol - 1e-9);
  return t.legacy_preamble_us + symbols * t.symbol_with_gi_us();
}

}  // namespace mapc
