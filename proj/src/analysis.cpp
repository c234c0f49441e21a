#include "mapc/analysis.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mapc/error.hpp"

namespace mapc {

namespace {

void check_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ModelError("tau must lie in (0, 1)");
}

}  // namespace

SlotProbabilities contention_probabilities(std::size_t num_contenders, double tau) {
  check_tau(tau);
  if (num_contenders == 0) throw ModelError("at least one contender is required");
  const double m = static_cast<double>(num_contenders);
  SlotProbabilities p;
  p.success = m * tau * std::pow(1.0 - tau, m - 1.0);
  p.empty = std::pow(1.0 - tau, m);
  p.collision = 1.0 - p.empty - p.success;
  return p;
}

SlotProbabilities coordinated_probabilities(double tau) {
  check_tau(tau);
  return {1.0 - tau, tau, 0.0};
}

double ncmap_success_duration_us(const McsEntry& mcs, const TimingConstants& t) {
  return t.t_rts_us + t.t_sifs_us + t.t_cts_us + t.t_sifs_us +
         ppdu_airtime_us(t.payload_bytes, mcs, t) + t.t_sifs_us + t.t_ack_us + t.t_difs_us +
         t.t_empty_slot_us;
}

ThroughputReport throughput_ncmap(const Deployment& dep, const RssiMatrix& rssi,
                                  const RadioParams& radio) {
  const TimingConstants& t = radio.timing;
  const double tau = t.tau();
  const std::size_t num_aps = dep.num_aps();
  const auto p = contention_probabilities(num_aps, tau);
  const double per_ap_success = tau * std::pow(1.0 - tau, static_cast<double>(num_aps) - 1.0);
  const std::size_t top = rssi.max_level();

  double weighted_success_us = 0.0;
  for (std::size_t m = 0; m < num_aps; ++m) {
    const auto stas = dep.stas_of(m);
    if (stas.empty()) throw ModelError("AP " + std::to_string(m) + " has no STAs");
    const double w = per_ap_success / static_cast<double>(stas.size());
    for (std::size_t s : stas) {
      const double snr = sinr_db(rssi.rssi_dbm(s, m, top), {}, radio.noise_floor_dbm);
      const auto mcs = select_mcs(snr, radio.mcs);
      if (!mcs) throw ModelError("STA " + std::to_string(s) + " is infeasible at maximum power");
      weighted_success_us += w * ncmap_success_duration_us(*mcs, t);
    }
  }
  const double collision_us = t.t_rts_us + t.t_cts_timeout_us;

  ThroughputReport r;
  r.mode = Mode::kNcMap;
  r.success_probability = p.success;
  r.bits_per_success = t.payload_bits();
  r.expected_slot_us = p.empty * t.t_empty_slot_us + weighted_success_us + p.collision * collision_us;
  r.aggregate_mbps = p.success * r.bits_per_success / r.expected_slot_us;
  return r;
}

double txop_duration_us(const Schedule& schedule, const TimingConstants& t) {
  double total = t.t_map_rts_us + t.t_sifs_us + t.t_map_cts_us + t.t_sifs_us;
  for (const auto& slot : schedule.slots) total += slot.slot_duration_us;
  return total;
}

ThroughputReport throughput_coordinated(const Schedule& schedule, std::size_t total_stas,
                                        const RadioParams& radio) {
  const TimingConstants& t = radio.timing;
  if (schedule.slots.empty()) throw ModelError("empty schedule");
  std::vector<int> seen(total_stas, 0);
  double txop_us = t.t_map_rts_us + t.t_sifs_us + t.t_map_cts_us + t.t_sifs_us;
  std::vector<McsEntry> slot_mcs;
  for (const auto& slot : schedule.slots) {
    if (slot.links.empty()) throw ModelError("slot without transmissions");
    slot_mcs.clear();
    for (const auto& l : slot.links) {
      if (l.sta >= total_stas) throw ModelError("schedule references unknown STA");
      ++seen[l.sta];
      slot_mcs.push_back(radio.mcs.at(l.mcs_index));
    }
    txop_us += coordinated_slot_duration_us(slot_mcs, t);
  }
  for (std::size_t s = 0; s < total_stas; ++s) {
    if (seen[s] != 1) {
      throw ModelError("STA " + std::to_string(s) + " scheduled " + std::to_string(seen[s]) +
                       " times");
    }
  }

  const auto p = coordinated_probabilities(t.tau());
  ThroughputReport r;
  r.mode = schedule.mode;
  r.success_probability = p.success;
  r.bits_per_success = static_cast<double>(total_stas) * t.payload_bits();
  r.txop_duration_us = txop_us;
  r.num_coordinated_slots = schedule.slots.size();
  r.expected_slot_us = p.empty * t.t_empty_slot_us + p.success * txop_us;
  r.aggregate_mbps = p.success * r.bits_per_success / r.expected_slot_us;
  return r;
}

double gain_percent(const ThroughputReport& candidate, const ThroughputReport& baseline) {
  if (baseline.aggregate_mbps == 0.0) throw DomainError("gain against a zero baseline");
  return 100.0 * (candidate.aggregate_mbps - baseline.aggregate_mbps) / baseline.aggregate_mbps;
}

}  // namespace mapc
