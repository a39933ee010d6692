#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ecosense/domain/types.hpp"
#include "ecosense/oracles/models.hpp"
#include "ecosense/oracles/rng.hpp"

namespace ecosense::pipeline {

enum class Mode { Collaborative, AllEdge, AllCloud };
enum class Route { Edge, Cloud };

std::string_view to_string(Mode mode) noexcept;
Mode mode_from_string(std::string_view text);
std::string_view to_string(Route route) noexcept;

struct RoutingPolicy {
  double tau = 0.5;      // difficulty >= tau goes to the cloud
  double nms_iou = 0.5;  // NMS suppression threshold
  Mode mode = Mode::Collaborative;

  void validate() const;
  bool operator==(const RoutingPolicy&) const = default;
};

// The stochastic stand-ins for every learned component.
struct OracleSet {
  ClassCatalog catalog = ClassCatalog::seaships();
  oracles::ConfusionMatrix edge = oracles::ConfusionMatrix::identity(6);
  oracles::ConfusionMatrix cloud = oracles::ConfusionMatrix::identity(6);
  oracles::DifficultyModel difficulty;
  oracles::LocalizerModel localizer;

  // Throws CatalogMismatch when a matrix does not match the catalog.
  void check_consistent() const;
  bool operator==(const OracleSet&) const = default;
};

// How a proposal turns into transmitted bytes.
struct TransferModel {
  double bytes_per_pixel = kDefaultBytesPerPixel;
  Bytes result_metadata_bytes = 64;
};

struct ProposalEvent {
  Proposal proposal;
  double difficulty_score = 0.0;
  bool is_hard = false;
  Route routed_to = Route::Edge;
  ClassIndex predicted_class = 0;
  bool correct = false;
  Bytes bytes_tx = 0;  // upstream: crop + metadata header when a crop is sent
  Bytes bytes_rx = 0;  // downstream: classification result from the cloud
};

struct FrameResult {
  std::uint64_t frame_id = 0;
  Bytes frame_bytes_tx = 0;  // whole-frame upload (all-cloud mode only)
  std::vector<ProposalEvent> events;
  std::uint64_t edge_inferences = 0;
  std::uint64_t cloud_inferences = 0;

  Bytes bytes_tx() const noexcept;
  Bytes bytes_rx() const noexcept;
};

/// One pass of the edge-cloud state machine over a frame:
/// localize -> NMS -> per proposal: difficulty draw, difficulty estimate,
/// route, classify.
///
/// Collaborative: a proposal scoring >= tau has its crop (plus a metadata
///   header) sent upstream and is classified with the cloud matrix; the rest
///   are classified at the edge, honoring the drawn edge-correctness flag.
/// AllEdge: nothing is transmitted; every proposal is classified at the edge.
/// AllCloud: the whole frame is sent once and every proposal is classified
///   in the cloud.
/// Cloud results return `result_metadata_bytes` downstream.
///
/// Every proposal consumes the same random draws whatever its route, so runs
/// that differ only in tau or mode see identical proposals and draws.
FrameResult process_frame(const Frame& frame, const RoutingPolicy& policy, const OracleSet& oracles,
                          const TransferModel& transfer, const oracles::SeededRng& rng);

}  // namespace ecosense::pipeline
