#include "mapc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "mapc/error.hpp"

namespace mapc {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::kNcMap:
      return "nc-MAP";
    case Mode::kCTdma:
      return "c-TDMA";
    case Mode::kCTdmaSr:
      return "c-TDMA/SR";
  }
  return "?";
}

double coordinated_tx_duration_us(const McsEntry& mcs, const TimingConstants& t) {
  return ppdu_airtime_us(t.payload_bytes, mcs, t) + t.t_sifs_us + t.t_ack_us + t.t_difs_us;
}

double coordinated_slot_duration_us(std::span<const McsEntry> mcs_per_link,
                                    const TimingConstants& t) {
  double longest = 0.0;
  for (const auto& m : mcs_per_link) longest = std::max(longest, coordinated_tx_duration_us(m, t));
  return t.t_map_tf_us + t.t_sifs_us + longest;
}

double score_alpha(std::span<const McsEntry> mcs_per_link, const TimingConstants& t) {
  if (mcs_per_link.empty()) throw DomainError("alpha of an empty combination");
  const double bits = t.payload_bits() * static_cast<double>(mcs_per_link.size());
  return bits / coordinated_slot_duration_us(mcs_per_link, t);
}

namespace {

// Advances `digits` as a mixed-radix counter, last digit fastest.
// Returns false after wrapping around.
bool next_odometer(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  for (std::size_t i = k; i-- > 0;) {
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lookup of per-slot durations by MCS index to avoid recomputing airtimes.
struct DurationCache {
  std::vector<double> tx_us;

  DurationCache(const McsTable& table, const TimingConstants& t) {
    for (const auto& e : table.entries()) tx_us.push_back(coordinated_tx_duration_us(e, t));
  }
};

}  // namespace

std::vector<Combination> enumerate_combinations(const Deployment& dep, const RssiMatrix& rssi,
                                                const RadioParams& radio,
                                                const EnumerationOptions& options) {
  const std::size_t num_aps = dep.num_aps();
  if (rssi.num_aps() != num_aps || rssi.num_stas() != dep.total_stas()) {
    throw DomainError("RSSI matrix does not match the deployment");
  }
  const TimingConstants& t = radio.timing;
  const DurationCache durations(radio.mcs, t);
  const double noise_mw = dbm_to_mw(radio.noise_floor_dbm);
  const auto levels = rssi.tx_power_levels_dbm();

  std::vector<std::vector<std::size_t>> stas_by_ap(num_aps);
  for (std::size_t m = 0; m < num_aps; ++m) stas_by_ap[m] = dep.stas_of(m);

  // Power level indices selectable per AP.
  std::vector<std::size_t> level_choices;
  if (options.fixed_power) {
    level_choices.push_back(rssi.max_level());
  } else {
    level_choices.resize(rssi.num_levels());
    std::iota(level_choices.begin(), level_choices.end(), std::size_t{0});
  }

  std::vector<Combination> out;
  std::size_t rank = 0;
  std::vector<double> sinr(num_aps);
  std::vector<int> mcs(num_aps);

  for (std::size_t k = 1; k <= num_aps; ++k) {
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    do {
      std::vector<std::size_t> sta_radix(k);
      bool any_empty = false;
      for (std::size_t i = 0; i < k; ++i) {
        sta_radix[i] = stas_by_ap[subset[i]].size();
        any_empty = any_empty || sta_radix[i] == 0;
      }
      if (any_empty) continue;
      const std::vector<std::size_t> power_radix(k, level_choices.size());
      std::vector<std::size_t> sta_pick(k, 0);
      do {
        std::vector<std::size_t> power_pick(k, 0);
        do {
          bool feasible = true;
          double slot_tx_us = 0.0;
          for (std::size_t i = 0; i < k && feasible; ++i) {
            const std::size_t sta = stas_by_ap[subset[i]][sta_pick[i]];
            const double target = rssi.rssi_dbm(sta, subset[i], level_choices[power_pick[i]]);
            if (k == 1) {
              sinr[i] = target - radio.noise_floor_dbm;
            } else {
              double interference_mw = noise_mw;
              for (std::size_t j = 0; j < k; ++j) {
                if (j != i) {
                  interference_mw += rssi.rssi_mw(sta, subset[j], level_choices[power_pick[j]]);
                }
              }
              sinr[i] = target - mw_to_dbm(interference_mw);
            }
            const auto entry = select_mcs(sinr[i], radio.mcs);
            if (!entry) {
              feasible = false;
            } else {
              mcs[i] = entry->index;
              slot_tx_us = std::max(slot_tx_us, durations.tx_us[static_cast<std::size_t>(entry->index)]);
            }
          }
          if (feasible) {
            Combination c;
            c.links.reserve(k);
            for (std::size_t i = 0; i < k; ++i) {
              c.links.push_back({subset[i], stas_by_ap[subset[i]][sta_pick[i]],
                                 levels[level_choices[power_pick[i]]], sinr[i], mcs[i]});
            }
            c.total_bits = t.payload_bits() * static_cast<double>(k);
            c.slot_duration_us = t.t_map_tf_us + t.t_sifs_us + slot_tx_us;
            c.alpha_mbps = c.total_bits / c.slot_duration_us;
            c.enum_rank = rank;
            out.push_back(std::move(c));
          }
          ++rank;
        } while (next_odometer(power_pick, power_radix));
      } while (next_odometer(sta_pick, sta_radix));
    } while (next_subset(subset, num_aps));
  }
  return out;
}

std::vector<std::size_t> rank_combinations(std::span<const Combination> combos) {
  std::vector<std::size_t> order(combos.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (combos[a].alpha_mbps != combos[b].alpha_mbps) {
      return combos[a].alpha_mbps > combos[b].alpha_mbps;
    }
    if (combos[a].enum_rank != combos[b].enum_rank) {
      return combos[a].enum_rank < combos[b].enum_rank;
    }
    return a < b;
  });
  return order;
}

Schedule greedy_select(std::span<const Combination> combos, const Deployment& dep,
                       std::vector<GreedyStep>* trace) {
  const std::size_t n = dep.total_stas();
  std::vector<bool> covered(n, false);
  std::size_t remaining = n;
  Schedule schedule;
  schedule.mode = Mode::kCTdmaSr;
  if (trace) trace->clear();

  for (std::size_t idx : rank_combinations(combos)) {
    if (remaining == 0) break;
    const auto& c = combos[idx];
    std::optional<std::size_t> conflict;
    for (const auto& l : c.links) {
      if (l.sta >= n) throw DomainError("combination references unknown STA");
      if (covered[l.sta]) {
        conflict = l.sta;
        break;
      }
    }
    if (trace) trace->push_back({idx, !conflict, conflict.value_or(0)});
    if (conflict) continue;
    for (const auto& l : c.links) covered[l.sta] = true;
    remaining -= c.links.size();
    schedule.slots.push_back(c);
  }

  for (std::size_t s = 0; s < n; ++s) {
    if (!covered[s]) {
      throw SchedulingError("STA " + std::to_string(s) + " is not reachable by any combination");
    }
  }
  schedule.covered_stas.resize(n);
  std::iota(schedule.covered_stas.begin(), schedule.covered_stas.end(), std::size_t{0});
  return schedule;
}

Schedule build_ctdma_schedule(const Deployment& dep, const RssiMatrix& rssi,
                              const RadioParams& radio) {
  if (rssi.num_aps() != dep.num_aps() || rssi.num_stas() != dep.total_stas()) {
    throw DomainError("RSSI matrix does not match the deployment");
  }
  const std::size_t top = rssi.max_level();
  Schedule schedule;
  schedule.mode = Mode::kCTdma;
  for (std::size_t s = 0; s < dep.total_stas(); ++s) {
    const std::size_t ap = dep.association[s];
    const double snr = sinr_db(rssi.rssi_dbm(s, ap, top), {}, radio.noise_floor_dbm);
    const auto entry = select_mcs(snr, radio.mcs);
    if (!entry) {
      throw SchedulingError("STA " + std::to_string(s) + " is infeasible at maximum power (SNR " +
                            std::to_string(snr) + " dB)");
    }
    const McsEntry one[] = {*entry};
    Combination c;
    c.links.push_back({ap, s, rssi.tx_power_levels_dbm()[top], snr, entry->index});
    c.total_bits = radio.timing.payload_bits();
    c.slot_duration_us = coordinated_slot_duration_us(one, radio.timing);
    c.alpha_mbps = c.total_bits / c.slot_duration_us;
    c.enum_rank = s;
    schedule.slots.push_back(std::move(c));
    schedule.covered_stas.push_back(s);
  }
  return schedule;
}

Schedule brute_force_optimal(const Deployment& dep, const RssiMatrix& rssi,
                             const RadioParams& radio, const EnumerationOptions& options,
                             std::size_t max_stas) {
  const std::size_t n = dep.total_stas();
  if (n > max_stas || n >= 31) {
    throw DomainError("brute force refuses " + std::to_string(n) + " STAs (limit " +
                      std::to_string(max_stas) + ")");
  }
  const auto combos = enumerate_combinations(dep, rssi, radio, options);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Shortest feasible slot for every STA set.
  std::vector<std::size_t> best(std::size_t{full} + 1, kNone);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    std::uint32_t mask = 0;
    for (const auto& l : combos[i].links) mask |= std::uint32_t{1} << l.sta;
    auto& b = best[mask];
    if (b == kNone || combos[i].slot_duration_us < combos[b].slot_duration_us) b = i;
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(std::size_t{full} + 1, kInf);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  cost[0] = 0.0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    // Every submask containing the lowest STA.
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || best[sub] == kNone) continue;
      const double c = combos[best[sub]].slot_duration_us + cost[mask ^ sub];
      if (c < cost[mask]) {
        cost[mask] = c;
        choice[mask] = sub;
      }
    }
  }
  if (cost[full] == kInf) throw SchedulingError("no feasible partition covers every STA");

  Schedule schedule;
  schedule.mode = Mode::kCTdmaSr;
  for (std::uint32_t mask = full; mask; mask ^= choice[mask]) {
    schedule.slots.push_back(combos[best[choice[mask]]]);
  }
  schedule.covered_stas.resize(n);
  std::iota(schedule.covered_stas.begin(), schedule.covered_stas.end(), std::size_t{0});
  return schedule;
}

std::string format_combination_table(std::span<const Combination> combos,
                                     const Deployment& dep, std::size_t limit) {
  std::ostringstream os;
  os << "combination";
  for (std::size_t m = 0; m < dep.num_aps(); ++m) {
    os << " | AP" << m + 1 << " P[dBm] | AP" << m + 1 << " STA";
  }
  os << " | alpha[Mbps]\n";
  const auto order = rank_combinations(combos);
  const std::size_t count = limit == 0 ? order.size() : std::min(limit, order.size());
  char buf[64];
  for (std::size_t r = 0; r < count; ++r) {
    const auto& c = combos[order[r]];
    os << 'c' << r + 1;
    for (std::size_t m = 0; m < dep.num_aps(); ++m) {
      const auto it = std::find_if(c.links.begin(), c.links.end(),
                                   [m](const Link& l) { return l.ap == m; });
      if (it == c.links.end()) {
        os << " | - | -";
      } else {
        std::snprintf(buf, sizeof buf, " | %g | %zu", it->tx_power_dbm, it->sta + 1);
        os << buf;
      }
    }
    std::snprintf(buf, sizeof buf, " | %.2f\n", c.alpha_mbps);
    os << buf;
  }
  return os.str();
}

}  // namespace mapc
