#include "mapc/report.hpp"

#include <cstdio>
#include <fstream>

#include "mapc/error.hpp"

namespace mapc {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string mbps(const std::optional<ThroughputReport>& r) {
  return r ? format_number(r->aggregate_mbps) : std::string();
}

std::string txop(const std::optional<ThroughputReport>& r) {
  return r ? format_number(r->txop_duration_us) : std::string();
}

std::string slots(const std::optional<ThroughputReport>& r) {
  return r ? std::to_string(r->num_coordinated_slots) : std::string();
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_deployments_csv(std::ostream& os, const ExperimentResults& results) {
  os << "index,seed,ncmap_mbps,ctdma_mbps,sr_mbps,sr_fixed_mbps,ctdma_gain_pct,sr_gain_pct,"
        "sr_fixed_gain_pct,ctdma_txop_us,sr_txop_us,sr_fixed_txop_us,ctdma_slots,sr_slots,"
        "sr_fixed_slots\n";
  for (const auto& r : results.records) {
    const auto& e = r.eval;
    os << r.index << ',' << r.seed << ',' << mbps(e.ncmap) << ',' << mbps(e.ctdma) << ','
       << mbps(e.sr_variable) << ',' << mbps(e.sr_fixed) << ',' << opt(r.ctdma_gain_pct) << ','
       << opt(r.sr_gain_pct) << ',' << opt(r.sr_fixed_gain_pct) << ',' << txop(e.ctdma) << ','
       << txop(e.sr_variable) << ',' << txop(e.sr_fixed) << ',' << slots(e.ctdma) << ','
       << slots(e.sr_variable) << ',' << slots(e.sr_fixed) << '\n';
  }
}

void write_discards_csv(std::ostream& os, const ExperimentResults& results) {
  os << "index,seed,reason\n";
  for (const auto& d : results.discarded) {
    os << d.index << ',' << d.seed << ",\"" << d.reason << "\"\n";
  }
}

void write_percentile_csv(std::ostream& os, const std::vector<CdfColumn>& columns) {
  std::vector<std::string> names;
  std::vector<std::vector<double>> tables;
  for (const auto& c : columns) {
    if (c.samples.empty()) continue;
    names.push_back(c.name);
    tables.push_back(EmpiricalCdf(c.samples).percentile_table());
  }
  os << "percentile";
  for (const auto& n : names) os << ',' << n;
  os << '\n';
  for (int k = 0; k <= 100; ++k) {
    os << k;
    for (const auto& t : tables) os << ',' << format_number(t[static_cast<std::size_t>(k)]);
    os << '\n';
  }
}

std::vector<double> collect(const ExperimentResults& results, Metric metric) {
  std::vector<double> out;
  out.reserve(results.records.size());
  for (const auto& r : results.records) {
    std::optional<double> v;
    switch (metric) {
      case Metric::kCTdmaGain:
        v = r.ctdma_gain_pct;
        break;
      case Metric::kSrGain:
        v = r.sr_gain_pct;
        break;
      case Metric::kSrFixedGain:
        v = r.sr_fixed_gain_pct;
        break;
      case Metric::kCTdmaTxop:
        if (r.eval.ctdma) v = r.eval.ctdma->txop_duration_us;
        break;
      case Metric::kSrTxop:
        if (r.eval.sr_variable) v = r.eval.sr_variable->txop_duration_us;
        break;
      case Metric::kSrFixedTxop:
        if (r.eval.sr_fixed) v = r.eval.sr_fixed->txop_duration_us;
        break;
    }
    if (v) out.push_back(*v);
  }
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace mapc
