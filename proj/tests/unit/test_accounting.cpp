#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ecosense/accounting/ledger.hpp"
#include "ecosense/accounting/platforms.hpp"
#include "ecosense/error.hpp"
#include "ecosense/harness/config.hpp"
#include "ecosense/pipeline/scenario.hpp"
#include "test_support.hpp"

namespace ecosense::accounting {
namespace {

const PlatformProfile kTpuDev{"TPU Dev", 9.0, 3.47, PlatformRole::Edge};
const PlatformProfile kAlveo{"Alveo U200", 16.8, 17.8, PlatformRole::Cloud};
const ChannelProfile kChannel{12.5e6, 1e-7, 64};

RunLedger ledger_of(const pipeline::ScenarioConfig& c, pipeline::Mode mode) {
  const auto frames = pipeline::run_scenario(c, mode);
  return build_ledger(frames, c.oracles.catalog.size(), c.edge_platform, c.cloud_platform, c.channel);
}

TEST(EnergyOf, PlatformProducts) {
  const auto zero = energy_of(0, 0, 0, kTpuDev, kAlveo, kChannel);
  EXPECT_EQ(zero.total(), 0.0);
  EXPECT_NEAR(energy_of(1, 0, 0, kTpuDev, kAlveo, kChannel).edge_j, 0.031230, 1e-9);
  EXPECT_NEAR(energy_of(0, 10, 0, kTpuDev, kAlveo, kChannel).cloud_j, 2.99040, 1e-9);
  EXPECT_NEAR(energy_of(0, 0, 1'000'000, kTpuDev, kAlveo, kChannel).comm_j, 0.1, 1e-12);
}

TEST(Dtvr, Cases) {
  RunLedger central;
  central.bytes_up = 1000;
  RunLedger ours;
  EXPECT_EQ(dtvr(ours, central), 0.0);
  EXPECT_EQ(dtvr(central, central), 1.0);
  ours.bytes_up = 46;
  EXPECT_DOUBLE_EQ(dtvr(ours, central), 0.046);
  try {
    dtvr(ours, RunLedger{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZeroBaseline);
  }
}

TEST(Ecr, Cases) {
  RunLedger central;
  central.cloud_energy_j = 10.0;
  central.comm_energy_j = 2.0;
  EXPECT_EQ(ecr(central, central), 1.0);
  // Free channel, no edge work: ratio of cloud inference counts.
  const ChannelProfile free_ish{1e6, 1e-300, 64};
  const auto a = energy_of(0, 30, 0, kTpuDev, kAlveo, free_ish);
  const auto b = energy_of(0, 120, 0, kTpuDev, kAlveo, free_ish);
  RunLedger la, lb;
  la.cloud_energy_j = a.cloud_j;
  lb.cloud_energy_j = b.cloud_j;
  EXPECT_NEAR(ecr(la, lb), 0.25, 1e-15);
  EXPECT_THROW(ecr(central, RunLedger{}), Error);
}

TEST(Breakdown, Cases) {
  RunLedger comm_only;
  comm_only.comm_energy_j = 5.0;
  EXPECT_EQ(breakdown(comm_only), (Breakdown{0.0, 1.0, 0.0}));
  RunLedger thirds;
  thirds.edge_energy_j = thirds.comm_energy_j = thirds.cloud_energy_j = 2.0;
  const auto b = breakdown(thirds);
  EXPECT_NEAR(b.edge, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(b.edge + b.comm + b.cloud, 1.0, 1e-9);
  try {
    breakdown(RunLedger{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroTotalEnergy);
  }
}

TEST(RealtimeCheck, PublishedPassAndFailSets) {
  std::set<std::string> pass, fail;
  for (const auto& p : platform_presets()) {
    if (p.role() != PlatformRole::Edge) continue;
    (realtime_check(p) ? pass : fail).insert(p.name());
  }
  EXPECT_EQ(pass, (std::set<std::string>{"TPU USB", "TPU Dev", "TPU Mini"}));
  EXPECT_EQ(fail, (std::set<std::string>{"Orin", "Orin Nano", "Nano", "ZCU104", "Kria 260"}));
  EXPECT_TRUE(realtime_check(kTpuDev));
  EXPECT_FALSE(realtime_check(platform_preset("Nano")));
  EXPECT_THROW(platform_preset("Raspberry Pi"), Error);
}

TEST(RealtimeCheck, MonotoneInLatency) {
  for (double a = 1.0; a < 120.0; a += 0.5) {
    for (double b = 0.5; b < a; b += 3.7) {
      const PlatformProfile pa("a", a, 1.0, PlatformRole::Edge), pb("b", b, 1.0, PlatformRole::Edge);
      if (realtime_check(pa)) EXPECT_TRUE(realtime_check(pb));
    }
  }
}

TEST(PlatformPresets, TableValues) {
  const auto& ps = platform_presets();
  ASSERT_EQ(ps.size(), 10u);
  EXPECT_EQ(platform_preset("Kria 260").latency_ms(), 126.35);
  EXPECT_EQ(platform_preset("TPU Mini").power_w(), 0.92);
  EXPECT_EQ(platform_preset("RTX 4090").power_w(), 245.0);
  EXPECT_EQ(platform_preset("Alveo U200"), kAlveo);
  EXPECT_EQ(platform_preset("TPU Dev"), kTpuDev);
}

class LedgerProperties : public ::testing::Test {
 protected:
  void SetUp() override {
    config_ = harness::load_config(testing::config_path("seaships-calibrated.json"));
    config_.frame_count = 2000;
  }
  pipeline::ScenarioConfig config_;
};

TEST_F(LedgerProperties, TotalsEqualFoldOverEvents) {
  const auto frames = pipeline::run_scenario(config_);
  const auto l = build_ledger(frames, 6, config_.edge_platform, config_.cloud_platform, config_.channel);
  std::uint64_t proposals = 0, correct = 0;
  Bytes up = 0, down = 0;
  for (const auto& f : frames) {
    for (const auto& e : f.events) {
      ++proposals;
      correct += e.correct;
      up += e.bytes_tx;
      down += e.bytes_rx;
    }
  }
  EXPECT_EQ(l.proposals, proposals);
  EXPECT_EQ(l.correct, correct);
  EXPECT_EQ(l.bytes_up, up);
  EXPECT_EQ(l.bytes_down, down);
  std::uint64_t by_class = 0;
  for (auto c : l.class_total) by_class += c;
  EXPECT_EQ(by_class, proposals);
  const auto e = energy_of(frames, config_.edge_platform, config_.cloud_platform, config_.channel);
  EXPECT_EQ(e.edge_j, l.edge_energy_j);
  EXPECT_EQ(e.comm_j, l.comm_energy_j);
  EXPECT_EQ(e.cloud_j, l.cloud_energy_j);
  EXPECT_DOUBLE_EQ(l.edge_latency_ms_per_frame(), l.edge_busy_ms / 2000.0);
}

TEST_F(LedgerProperties, AdditivityOverConcatenatedRuns) {
  const auto frames = pipeline::run_scenario(config_);
  const std::span<const pipeline::FrameResult> all(frames);
  const auto whole = build_ledger(all, 6, config_.edge_platform, config_.cloud_platform, config_.channel);
  const auto first = build_ledger(all.subspan(0, 700), 6, config_.edge_platform, config_.cloud_platform, config_.channel);
  const auto rest = build_ledger(all.subspan(700), 6, config_.edge_platform, config_.cloud_platform, config_.channel);
  const auto sum = first + rest;
  EXPECT_EQ(sum.proposals, whole.proposals);
  EXPECT_EQ(sum.bytes_up, whole.bytes_up);
  EXPECT_EQ(sum.class_correct, whole.class_correct);
  EXPECT_NEAR(sum.total_energy_j(), whole.total_energy_j(), 1e-9 * whole.total_energy_j());

  const auto central = ledger_of(config_, pipeline::Mode::AllCloud);
  EXPECT_NEAR(ecr(sum, central), ecr(whole, central), 1e-12);
  EXPECT_EQ(dtvr(sum, central), dtvr(whole, central));
}

TEST_F(LedgerProperties, ComparisonAgainstCentralizedBaseline) {
  const auto ours = ledger_of(config_, pipeline::Mode::Collaborative);
  const auto central = ledger_of(config_, pipeline::Mode::AllCloud);
  EXPECT_EQ(central.edge_energy_j, 0.0);
  EXPECT_LE(dtvr(ours, central), 1.0);
  const double r = ecr(ours, central);
  EXPECT_NEAR(r * central.total_energy_j(), ours.total_energy_j(), 1e-9 * ours.total_energy_j());

  const auto m = compute_metrics(ours, central, config_.edge_platform, true);
  ASSERT_TRUE(m.breakdown.has_value());
  const auto& b = *m.breakdown;
  EXPECT_GE(b.edge, 0.0);
  EXPECT_NEAR(b.edge + b.comm + b.cloud, 1.0, 1e-9);
  EXPECT_LT(b.comm, breakdown(central).comm);
  EXPECT_TRUE(m.realtime_ok);

  const auto self = compute_metrics(central, central, config_.edge_platform, false);
  EXPECT_EQ(self.dtvr, 1.0);
  EXPECT_EQ(self.ecr, 1.0);
}

TEST_F(LedgerProperties, AllEdgeRunHasNoUpstreamBytes) {
  const auto edge = ledger_of(config_, pipeline::Mode::AllEdge);
  const auto central = ledger_of(config_, pipeline::Mode::AllCloud);
  EXPECT_EQ(dtvr(edge, central), 0.0);
  EXPECT_EQ(edge.comm_energy_j, 0.0);
  EXPECT_EQ(edge.bytes_down, 0u);
}

}  // namespace
}  // namespace ecosense::accounting
