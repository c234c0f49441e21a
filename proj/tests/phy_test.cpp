#include "mapc/phy.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "mapc/error.hpp"

namespace mapc {
namespace {

const McsTable kTable;
const TimingConstants kTiming;

TEST(McsTable, StandardRates) {
  ASSERT_EQ(kTable.size(), 11u);
  EXPECT_DOUBLE_EQ(kTable.at(0).bits_per_symbol, 490.0);
  EXPECT_DOUBLE_EQ(kTable.at(7).bits_per_symbol, 4900.0);
  EXPECT_DOUBLE_EQ(kTable.at(10).bits_per_symbol, 7350.0);
  for (std::size_t i = 0; i < kNumMcs; ++i) {
    EXPECT_EQ(kTable.at(static_cast<int>(i)).min_sinr_db, kDefaultMcsThresholdsDb[i]);
  }
}

TEST(McsTable, RejectsBrokenTables) {
  const double too_few[] = {1, 2, 3};
  EXPECT_THROW(McsTable{std::span<const double>(too_few)}, ConfigError);
  const double not_increasing[] = {2, 5, 8, 11, 15, 18, 20, 25, 29, 29, 34};
  EXPECT_THROW(McsTable{std::span<const double>(not_increasing)}, ConfigError);
  EXPECT_THROW(McsTable(std::vector<McsEntry>{{1, 490, 2}}), ConfigError);
  EXPECT_THROW(kTable.at(11), DomainError);
}

TEST(SelectMcs, TopOfTable) {
  const auto m = select_mcs(std::numeric_limits<double>::infinity(), kTable);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->index, 10);
}

TEST(SelectMcs, BelowMcs0IsInfeasible) {
  EXPECT_FALSE(select_mcs(kDefaultMcsThresholdsDb[0] - 0.01, kTable));
  EXPECT_FALSE(select_mcs(-std::numeric_limits<double>::infinity(), kTable));
}

TEST(SelectMcs, ThresholdIsInclusive) {
  const auto m = select_mcs(kDefaultMcsThresholdsDb[4], kTable);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->index, 4);
  EXPECT_EQ(select_mcs(std::nextafter(kDefaultMcsThresholdsDb[4], 0.0), kTable)->index, 3);
}

TEST(SelectMcs, Monotone) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> sinr(-10.0, 45.0);
  auto index = [](double s) {
    const auto m = select_mcs(s, kTable);
    return m ? m->index : -1;
  };
  for (int i = 0; i < 20000; ++i) {
    double a = sinr(rng), b = sinr(rng);
    if (a > b) std::swap(a, b);
    ASSERT_LE(index(a), index(b));
  }
}

TEST(DataRate, Examples) {
  EXPECT_NEAR(data_rate_mbps(kTable.at(0)), 36.03, 5e-3);
  EXPECT_NEAR(data_rate_mbps(kTable.at(7)), 360.29, 5e-3);
  McsEntry doubled = kTable.at(3);
  doubled.bits_per_symbol *= 2;
  EXPECT_DOUBLE_EQ(data_rate_mbps(doubled), 2 * data_rate_mbps(kTable.at(3)));
}

TEST(PpduAirtime, Examples) {
  EXPECT_NEAR(ppdu_airtime_us(1500, kTable.at(7), kTiming), 60.8, 1e-9);
  EXPECT_NEAR(ppdu_airtime_us(1500, kTable.at(0), kTiming), 360.0, 1e-9);
  for (const auto& e : kTable.entries()) {
    EXPECT_NEAR(ppdu_airtime_us(1, e, kTiming), 33.6, 1e-9) << e.index;
  }
  EXPECT_THROW(ppdu_airtime_us(0, kTable.at(0), kTiming), DomainError);
}

TEST(PpduAirtime, NonincreasingInMcs) {
  for (int bytes : {1, 40, 100, 500, 1500, 4000}) {
    for (int i = 1; i < 11; ++i) {
      ASSERT_LE(ppdu_airtime_us(bytes, kTable.at(i), kTiming),
                ppdu_airtime_us(bytes, kTable.at(i - 1), kTiming));
    }
  }
}

TEST(PpduAirtime, StepFunctionOfPayload) {
  for (const auto& e : kTable.entries()) {
    double previous = ppdu_airtime_us(1, e, kTiming);
    for (int bytes = 2; bytes <= 3000; ++bytes) {
      const double now = ppdu_airtime_us(bytes, e, kTiming);
      ASSERT_GE(now, previous);
      // Every value is the preamble plus a whole number of symbols.
      const double symbols = (now - kTiming.legacy_preamble_us) / kTiming.symbol_with_gi_us();
      ASSERT_NEAR(symbols, std::round(symbols), 1e-9);
      previous = now;
    }
  }
}

TEST(Timing, Validation) {
  TimingConstants t;
  EXPECT_NO_THROW(t.validate());
  EXPECT_DOUBLE_EQ(t.tau(), 2.0 / 17.0);
  t.t_sifs_us = 0;
  EXPECT_THROW(t.validate(), ConfigError);
}

}  // namespace
}  // namespace mapc
