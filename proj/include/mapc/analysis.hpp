#pragma once

#include <cstddef>

#include "mapc/deployment.hpp"
#include "mapc/phy.hpp"
#include "mapc/propagation.hpp"
#include "mapc/scheduler.hpp"

namespace mapc {

/// Bianchi slot probabilities: empty, success, collision.
struct SlotProbabilities {
  double empty = 0.0;
  double success = 0.0;
  double collision = 0.0;
};

/// M stations contending with a single backoff stage.
SlotProbabilities contention_probabilities(std::size_t num_contenders, double tau);

/// The coordinated modes: only the Sharing AP contends, so never collides.
SlotProbabilities coordinated_probabilities(double tau);

struct ThroughputReport {
  Mode mode = Mode::kNcMap;
  double aggregate_mbps = 0.0;
  double expected_slot_us = 0.0;
  /// Bits delivered by one successful slot.
  double bits_per_success = 0.0;
  double success_probability = 0.0;
  /// Coordinated modes only.
  double txop_duration_us = 0.0;
  std::size_t num_coordinated_slots = 0;
};

/// RTS + SIFS + CTS + SIFS + T_DATA + SIFS + ACK + DIFS + T_e.
double ncmap_success_duration_us(const McsEntry& mcs, const TimingConstants& t);

/// Uncoordinated DCF with RTS/CTS. Every AP sends to one of its STAs at
/// maximum power with an SNR-selected MCS.
ThroughputReport throughput_ncmap(const Deployment& dep, const RssiMatrix& rssi,
                                  const RadioParams& radio);

/// MAP-RTS + SIFS + MAP-CTS + SIFS + sum of slot durations.
double txop_duration_us(const Schedule& schedule, const TimingConstants& t);

/// Shared-TXOP throughput. `total_stas` is the STA count the schedule
/// must cover; any gap or repeat raises ModelError.
ThroughputReport throughput_coordinated(const Schedule& schedule, std::size_t total_stas,
                                        const RadioParams& radio);

/// 100 (candidate - baseline) / baseline. Throws DomainError on a zero baseline.
double gain_percent(const ThroughputReport& candidate, const ThroughputReport& baseline);

}  // namespace mapc
