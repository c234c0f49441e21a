#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mapc/deployment.hpp"
#include "mapc/phy.hpp"
#include "mapc/propagation.hpp"

namespace mapc {

enum class Mode { kNcMap, kCTdma, kCTdmaSr };

const char* to_string(Mode mode);

/// One AP-to-STA transmission inside a coordinated slot.
struct Link {
  std::size_t ap = 0;
  std::size_t sta = 0;
  double tx_power_dbm = 0.0;
  double sinr_db = 0.0;
  int mcs_index = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

/// A candidate coordinated slot: the simultaneous links and its score.
struct Combination {
  std::vector<Link> links;
  double total_bits = 0.0;
  double slot_duration_us = 0.0;
  /// Bits per microsecond, i.e. Mbps.
  double alpha_mbps = 0.0;
  std::size_t enum_rank = 0;

  friend bool operator==(const Combination&, const Combination&) = default;
};

struct Schedule {
  std::vector<Combination> slots;
  Mode mode = Mode::kCTdmaSr;
  /// Sorted station indices.
  std::vector<std::size_t> covered_stas;
};

struct EnumerationOptions {
  /// Restrict every AP to the highest power level.
  bool fixed_power = false;
};

/// T_DATA + SIFS + ACK + DIFS for one transmission in a coordinated slot.
double coordinated_tx_duration_us(const McsEntry& mcs, const TimingConstants& t);

/// MAP-TF + SIFS + the longest transmission among `mcs_per_link`.
double coordinated_slot_duration_us(std::span<const McsEntry> mcs_per_link,
                                    const TimingConstants& t);

/// alpha = total bits / slot duration. `mcs_per_link` must be non-empty.
double score_alpha(std::span<const McsEntry> mcs_per_link, const TimingConstants& t);

/// Enumerates every feasible coordinated slot. Order (recorded in
/// enum_rank, which also counts dropped candidates):
///   1. AP subsets by size, then lexicographically by AP index;
///   2. STA assignment lexicographic over the subset's APs;
///   3. power vector lexicographic over ascending power levels.
/// Candidates with any link below MCS 0 are dropped.
std::vector<Combination> enumerate_combinations(const Deployment& dep, const RssiMatrix& rssi,
                                                const RadioParams& radio,
                                                const EnumerationOptions& options = {});

/// Indices of `combos` ordered by alpha descending, then enum_rank ascending.
std::vector<std::size_t> rank_combinations(std::span<const Combination> combos);

/// What greedy_select did with each ranked combination it examined.
struct GreedyStep {
  std::size_t combo = 0;  // index into the input list
  bool accepted = false;
  /// First already-covered STA when rejected.
  std::size_t conflict_sta = 0;
};

Schedule greedy_select(std::span<const Combination> combos, const Deployment& dep,
                       std::vector<GreedyStep>* trace = nullptr);

/// One single-link slot per STA at maximum power, SNR-only MCS.
Schedule build_ctdma_schedule(const Deployment& dep, const RssiMatrix& rssi,
                              const RadioParams& radio);

inline constexpr std::size_t kDefaultBruteForceMaxStas = 12;

/// Exact minimum-TXOP partition of the STAs into feasible coordinated
/// slots (dynamic program over STA subsets). Refuses instances larger
/// than `max_stas`.
Schedule brute_force_optimal(const Deployment& dep, const RssiMatrix& rssi,
                             const RadioParams& radio, const EnumerationOptions& options = {},
                             std::size_t max_stas = kDefaultBruteForceMaxStas);

/// Ranked combination listing (combination id, power and STA per AP,
/// alpha), AP and STA numbers 1-based. `limit` == 0 prints everything.
std::string format_combination_table(std::span<const Combination> combos,
                                     const Deployment& dep, std::size_t limit = 0);

}  // namespace mapc
