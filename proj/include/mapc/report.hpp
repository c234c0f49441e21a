#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mapc/montecarlo.hpp"

namespace mapc {

/// Bumped whenever a column is added, removed or renamed.
inline constexpr int kCsvSchemaVersion = 1;

/// One row per retained deployment:
///   index,seed,ncmap_mbps,ctdma_mbps,sr_mbps,sr_fixed_mbps,
///   ctdma_gain_pct,sr_gain_pct,sr_fixed_gain_pct,
///   ctdma_txop_us,sr_txop_us,sr_fixed_txop_us,ctdma_slots,sr_slots,sr_fixed_slots
/// Fields for modes that did not run are left empty.
void write_deployments_csv(std::ostream& os, const ExperimentResults& results);

/// index,seed,reason
void write_discards_csv(std::ostream& os, const ExperimentResults& results);

/// A named column of samples for a percentile table.
struct CdfColumn {
  std::string name;
  std::vector<double> samples;
};

/// percentile,<column names...> with rows for percentiles 0..100.
/// Columns without samples are omitted.
void write_percentile_csv(std::ostream& os, const std::vector<CdfColumn>& columns);

/// Samples of one metric across the retained records.
enum class Metric {
  kCTdmaGain,
  kSrGain,
  kSrFixedGain,
  kCTdmaTxop,
  kSrTxop,
  kSrFixedTxop,
};

std::vector<double> collect(const ExperimentResults& results, Metric metric);

/// Fixed-format number used throughout the CSV outputs.
std::string format_number(double v);

/// Opens `path` for writing, throwing IoError on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace mapc
