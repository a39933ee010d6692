#pragma once

#include <vector>

#include "ecosense/domain/types.hpp"

namespace ecosense::modelmath {

// Intersection over union; 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Greedy non-maximum suppression.
///
/// Repeatedly keeps the highest-objectness remaining proposal and discards
/// every remaining proposal whose IoU with it exceeds `iou_threshold`.
/// Equal objectness is ordered by input position. The result is sorted by
/// descending objectness. `iou_threshold` must lie in (0, 1].
std::vector<Proposal> nms(const std::vector<Proposal>& proposals, double iou_threshold);

}  // namespace ecosense::modelmath
