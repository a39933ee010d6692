#include "ecosense/pipeline/pipeline.hpp"

#include <string>

#include "ecosense/error.hpp"
#include "ecosense/modelmath/geometry.hpp"

namespace ecosense::pipeline {

namespace {

enum StreamTag : std::uint64_t { kLocalizeStream = 1, kProposalStream = 2 };

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Collaborative: return "collaborative";
    case Mode::AllEdge: return "all-edge";
    case Mode::AllCloud: return "all-cloud";
  }
  return "collaborative";
}

Mode mode_from_string(std::string_view text) {
  if (text == "collaborative") return Mode::Collaborative;
  if (text == "all-edge") return Mode::AllEdge;
  if (text == "all-cloud") return Mode::AllCloud;
  throw Error(ErrorCode::InvalidValue, "unknown mode '" + std::string(text) +
                                           "' (expected collaborative, all-edge or all-cloud)");
}

std::string_view to_string(Route route) noexcept { return route == Route::Edge ? "edge" : "cloud"; }

void RoutingPolicy::validate() const {
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error(ErrorCode::ValidationError, "tau must lie in [0,1]", "routing.tau");
  if (!(nms_iou > 0.0 && nms_iou <= 1.0)) {
    throw Error(ErrorCode::ValidationError, "nms_iou must lie in (0,1]", "routing.nms_iou");
  }
}

void OracleSet::check_consistent() const {
  const auto n = catalog.size();
  if (edge.classes() != n || cloud.classes() != n) {
    throw Error(ErrorCode::CatalogMismatch, "confusion matrices must have " + std::to_string(n) +
                                                " classes to match the catalog");
  }
  difficulty.validate();
  localizer.validate();
}

Bytes FrameResult::bytes_tx() const noexcept {
  Bytes total = frame_bytes_tx;
  for (const auto& e : events) total += e.bytes_tx;
  return total;
}

Bytes FrameResult::bytes_rx() const noexcept {
  Bytes total = 0;
  for (const auto& e : events) total += e.bytes_rx;
  return total;
}

FrameResult process_frame(const Frame& frame, const RoutingPolicy& policy, const OracleSet& oracles,
                          const TransferModel& transfer, const oracles::SeededRng& rng) {
  policy.validate();
  oracles.check_consistent();
  validate_frame(frame, oracles.catalog);

  auto localize_rng = rng.derive({kLocalizeStream});
  const auto raw = oracles::localize(frame, oracles.localizer, localize_rng, transfer.bytes_per_pixel);
  const auto proposals = modelmath::nms(raw, policy.nms_iou);

  FrameResult result;
  result.frame_id = frame.frame_id();
  if (policy.mode == Mode::AllCloud) result.frame_bytes_tx = frame.bytes();
  result.events.reserve(proposals.size());

  for (std::size_t j = 0; j < proposals.size(); ++j) {
    const auto& p = proposals[j];
    auto prng = rng.derive({kProposalStream, j});
    const auto draw = oracles::assign_difficulty(p, oracles.difficulty, prng);
    const double score = oracles::estimate_difficulty(draw.is_hard, oracles.difficulty, prng);
    const auto edge_pred =
        oracles::classify_conditioned(p.true_class(), draw.edge_would_be_correct, oracles.edge, prng);
    const auto cloud_pred = oracles::classify(p.true_class(), oracles.cloud, prng);

    ProposalEvent ev{p, score, draw.is_hard};
    switch (policy.mode) {
      case Mode::Collaborative: ev.routed_to = score >= policy.tau ? Route::Cloud : Route::Edge; break;
      case Mode::AllEdge: ev.routed_to = Route::Edge; break;
      case Mode::AllCloud: ev.routed_to = Route::Cloud; break;
    }
    if (ev.routed_to == Route::Cloud) {
      ev.predicted_class = cloud_pred;
      ev.bytes_rx = transfer.result_metadata_bytes;
      if (policy.mode == Mode::Collaborative) ev.bytes_tx = p.crop_bytes() + transfer.result_metadata_bytes;
      ++result.cloud_inferences;
    } else {
      ev.predicted_class = edge_pred;
      ++result.edge_inferences;
    }
    ev.correct = ev.predicted_class == p.true_class();
    result.events.push_back(std::move(ev));
  }
  return result;
}

}  // namespace ecosense::pipeline
