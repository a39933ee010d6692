#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ecosense/domain/types.hpp"
#include "ecosense/pipeline/pipeline.hpp"

namespace ecosense::accounting {

inline constexpr double kRealtimeBoundMs = 66.0;

struct EnergySplit {
  double edge_j = 0.0;
  double comm_j = 0.0;
  double cloud_j = 0.0;

  double total() const noexcept { return edge_j + comm_j + cloud_j; }
};

// inferences x power x latency per platform; bytes_up x joules_per_byte.
EnergySplit energy_of(std::uint64_t edge_inferences, std::uint64_t cloud_inferences, Bytes bytes_up,
                      const PlatformProfile& edge, const PlatformProfile& cloud,
                      const ChannelProfile& channel);
EnergySplit energy_of(std::span<const pipeline::FrameResult> frames, const PlatformProfile& edge,
                      const PlatformProfile& cloud, const ChannelProfile& channel);

// Totals of one run. Energies and busy times are derived from the counts.
struct RunLedger {
  std::uint64_t frames = 0;
  std::uint64_t proposals = 0;
  std::uint64_t edge_inferences = 0;
  std::uint64_t cloud_inferences = 0;
  Bytes bytes_up = 0;
  Bytes bytes_down = 0;
  double edge_energy_j = 0.0;
  double comm_energy_j = 0.0;
  double cloud_energy_j = 0.0;
  double edge_busy_ms = 0.0;
  double cloud_busy_ms = 0.0;
  double uplink_ms = 0.0;
  std::uint64_t correct = 0;
  std::vector<std::uint64_t> class_correct;
  std::vector<std::uint64_t> class_total;

  RunLedger& operator+=(const RunLedger& other);
  bool operator==(const RunLedger&) const = default;

  double total_energy_j() const noexcept { return edge_energy_j + comm_energy_j + cloud_energy_j; }
  // Fraction of proposals classified correctly; 0 for an empty run.
  double accuracy() const noexcept;
  double edge_latency_ms_per_frame() const noexcept;
};

RunLedger operator+(RunLedger a, const RunLedger& b);

RunLedger build_ledger(std::span<const pipeline::FrameResult> frames, std::size_t classes,
                       const PlatformProfile& edge, const PlatformProfile& cloud,
                       const ChannelProfile& channel);

// Upstream bytes of ours over the centralized baseline.
double dtvr(const RunLedger& ours, const RunLedger& centralized);
// Total energy of ours over the centralized baseline.
double ecr(const RunLedger& ours, const RunLedger& centralized);

struct Breakdown {
  double edge = 0.0;
  double comm = 0.0;
  double cloud = 0.0;

  bool operator==(const Breakdown&) const = default;
};

// Energy shares; throws ZeroTotalEnergy when the ledger spent nothing.
Breakdown breakdown(const RunLedger& ledger);

bool realtime_check(const PlatformProfile& profile, double bound_ms = kRealtimeBoundMs);

struct SystemMetrics {
  double dtvr = 0.0;
  double ecr = 0.0;
  double accuracy = 0.0;
  std::optional<Breakdown> breakdown;  // empty when the run spent no energy
  bool realtime_ok = true;

  bool operator==(const SystemMetrics&) const = default;
};

// `uses_edge` is false for the centralized run, whose realtime verdict is
// vacuously true.
SystemMetrics compute_metrics(const RunLedger& ours, const RunLedger& centralized,
                              const PlatformProfile& edge, bool uses_edge);

}  // namespace ecosense::accounting
