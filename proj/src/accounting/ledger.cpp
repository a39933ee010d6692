#include "ecosense/accounting/ledger.hpp"

#include <algorithm>

#include "ecosense/error.hpp"

namespace ecosense::accounting {

EnergySplit energy_of(std::uint64_t edge_inferences, std::uint64_t cloud_inferences, Bytes bytes_up,
                      const PlatformProfile& edge, const PlatformProfile& cloud,
                      const ChannelProfile& channel) {
  return EnergySplit{
      static_cast<double>(edge_inferences) * edge.power_w() * edge.latency_ms() / 1000.0,
      static_cast<double>(bytes_up) * channel.joules_per_byte(),
      static_cast<double>(cloud_inferences) * cloud.power_w() * cloud.latency_ms() / 1000.0,
  };
}

EnergySplit energy_of(std::span<const pipeline::FrameResult> frames, const PlatformProfile& edge,
                      const PlatformProfile& cloud, const ChannelProfile& channel) {
  std::uint64_t e = 0, c = 0;
  Bytes up = 0;
  for (const auto& f : frames) {
    e += f.edge_inferences;
    c += f.cloud_inferences;
    up += f.bytes_tx();
  }
  return energy_of(e, c, up, edge, cloud, channel);
}

namespace {

void add_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

}  // namespace

RunLedger& RunLedger::operator+=(const RunLedger& o) {
  frames += o.frames;
  proposals += o.proposals;
  edge_inferences += o.edge_inferences;
  cloud_inferences += o.cloud_inferences;
  bytes_up += o.bytes_up;
  bytes_down += o.bytes_down;
  edge_energy_j += o.edge_energy_j;
  comm_energy_j += o.comm_energy_j;
  cloud_energy_j += o.cloud_energy_j;
  edge_busy_ms += o.edge_busy_ms;
  cloud_busy_ms += o.cloud_busy_ms;
  uplink_ms += o.uplink_ms;
  correct += o.correct;
  add_into(class_correct, o.class_correct);
  add_into(class_total, o.class_total);
  return *this;
}

RunLedger operator+(RunLedger a, const RunLedger& b) { return a += b; }

double RunLedger::accuracy() const noexcept {
  return proposals == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(proposals);
}

double RunLedger::edge_latency_ms_per_frame() const noexcept {
  return frames == 0 ? 0.0 : edge_busy_ms / static_cast<double>(frames);
}

RunLedger build_ledger(std::span<const pipeline::FrameResult> frames, std::size_t classes,
                       const PlatformProfile& edge, const PlatformProfile& cloud,
                       const ChannelProfile& channel) {
  RunLedger l;
  l.class_correct.assign(classes, 0);
  l.class_total.assign(classes, 0);
  for (const auto& f : frames) {
    ++l.frames;
    l.edge_inferences += f.edge_inferences;
    l.cloud_inferences += f.cloud_inferences;
    l.bytes_up += f.frame_bytes_tx;
    for (const auto& ev : f.events) {
      ++l.proposals;
      l.bytes_up += ev.bytes_tx;
      l.bytes_down += ev.bytes_rx;
      const auto cls = ev.proposal.true_class();
      if (cls >= classes) throw Error(ErrorCode::BadClassIndex, "event class outside catalog");
      ++l.class_total[cls];
      if (ev.correct) {
        ++l.correct;
        ++l.class_correct[cls];
      }
    }
  }
  const auto energy = energy_of(l.edge_inferences, l.cloud_inferences, l.bytes_up, edge, cloud, channel);
  l.edge_energy_j = energy.edge_j;
  l.comm_energy_j = energy.comm_j;
  l.cloud_energy_j = energy.cloud_j;
  l.edge_busy_ms = static_cast<double>(l.edge_inferences) * edge.latency_ms();
  l.cloud_busy_ms = static_cast<double>(l.cloud_inferences) * cloud.latency_ms();
  l.uplink_ms = static_cast<double>(l.bytes_up) / channel.bytes_per_second() * 1000.0;
  return l;
}

double dtvr(const RunLedger& ours, const RunLedger& centralized) {
  if (centralized.bytes_up == 0) {
    throw Error(ErrorCode::DivisionByZeroBaseline, "centralized run transmitted no bytes");
  }
  return static_cast<double>(ours.bytes_up) / static_cast<double>(centralized.bytes_up);
}

double ecr(const RunLedger& ours, const RunLedger& centralized) {
  const double base = centralized.total_energy_j();
  if (!(base > 0.0)) throw Error(ErrorCode::DivisionByZeroBaseline, "centralized run consumed no energy");
  return ours.total_energy_j() / base;
}

Breakdown breakdown(const RunLedger& ledger) {
  const double total = ledger.total_energy_j();
  if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotalEnergy, "ledger has no energy to break down");
  return Breakdown{ledger.edge_energy_j / total, ledger.comm_energy_j / total, ledger.cloud_energy_j / total};
}

bool realtime_check(const PlatformProfile& profile, double bound_ms) {
  return profile.latency_ms() < bound_ms;
}

SystemMetrics compute_metrics(const RunLedger& ours, const RunLedger& centralized,
                              const PlatformProfile& edge, bool uses_edge) {
  SystemMetrics m;
  m.dtvr = dtvr(ours, centralized);
  m.ecr = ecr(ours, centralized);
  m.accuracy = ours.accuracy();
  if (ours.total_energy_j() > 0.0) m.breakdown = breakdown(ours);
  m.realtime_ok = uses_edge ? realtime_check(edge) : true;
  return m;
}

}  // namespace ecosense::accounting
