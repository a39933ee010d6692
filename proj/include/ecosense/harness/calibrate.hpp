#pragma once

#include "ecosense/pipeline/scenario.hpp"

namespace ecosense::harness {

struct CalibrationTarget {
  double dtvr = 0.0;
  double ecr = 0.0;
};

// Closed-form per-frame expectations of a collaborative run against its
// all-cloud baseline on the same frame distribution.
struct AnalyticExpectation {
  double proposals_per_frame = 0.0;  // mean objects x recall
  double routed_fraction = 0.0;      // P(difficulty >= tau)
  double mean_crop_bytes = 0.0;      // exact mean over the crop-size grid
  double frame_bytes = 0.0;
  double dtvr = 0.0;
  double ecr = 0.0;
};

/// Expected DTVR/ECR of `config` in collaborative mode.
///
/// Exact when every duplicate proposal is suppressed by NMS (guaranteed when
/// the localizer's minimum duplicate IoU exceeds routing.nms_iou) and
/// objects in different grid cells never suppress each other.
AnalyticExpectation expected_metrics(const pipeline::ScenarioConfig& config);

// Mean of ceil(w * h * bytes_per_pixel) over the crop-size distribution.
double mean_crop_bytes(const pipeline::CropSizeModel& crops, double bytes_per_pixel);

/// Solves the free parameters so `expected_metrics` hits the targets.
///
/// p_hard is solved in closed form at the base crop scale. If no p_hard in
/// [0,1] reaches the DTVR target, the crop scale is bisected (within the
/// grid-cell bound) until one does, and p_hard is re-solved there.
/// joules_per_byte then follows from the ECR identity. The result matches
/// both targets analytically within 1e-6.
///
/// Throws Unattainable when a target lies outside what the base config can
/// reach, and ValidationError for targets <= 0.
pipeline::ScenarioConfig calibrate(const CalibrationTarget& target, const pipeline::ScenarioConfig& base);

}  // namespace ecosense::harness
