#include "ecosense/harness/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecosense/error.hpp"
#include "ecosense/oracles/models.hpp"

namespace ecosense::harness {

using pipeline::CropSizeModel;
using pipeline::ScenarioConfig;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

[[noreturn]] void unattainable(const std::string& what, double target, double lo, double hi) {
  throw Error(ErrorCode::Unattainable, what + " target " + fmt(target) + " outside attainable range [" +
                                           fmt(lo) + ", " + fmt(hi) + "]");
}

struct RoutingRates {
  double hard;  // P(route to cloud | hard)
  double easy;  // P(route to cloud | easy)
};

RoutingRates routing_rates(const ScenarioConfig& c) {
  const auto& m = c.oracles.difficulty;
  return {oracles::route_probability(m, c.routing.tau, true), oracles::route_probability(m, c.routing.tau, false)};
}

double proposals_per_frame(const ScenarioConfig& c) { return c.objects.mean() * c.oracles.localizer.recall; }

}  // namespace

double mean_crop_bytes(const CropSizeModel& crops, double bytes_per_pixel) {
  double total = 0.0;
  for (std::uint32_t w = crops.width_min; w <= crops.width_max; ++w) {
    const double sw = crops.scaled(w);
    for (std::uint32_t h = crops.height_min; h <= crops.height_max; ++h) {
      const double raw = std::ceil(sw * static_cast<double>(crops.scaled(h)) * bytes_per_pixel);
      total += std::max(raw, 1.0);
    }
  }
  const double count = static_cast<double>(crops.width_max - crops.width_min + 1) *
                       static_cast<double>(crops.height_max - crops.height_min + 1);
  return total / count;
}

AnalyticExpectation expected_metrics(const ScenarioConfig& c) {
  AnalyticExpectation e;
  const auto rates = routing_rates(c);
  const double p_hard = c.oracles.difficulty.p_hard;
  e.proposals_per_frame = proposals_per_frame(c);
  e.routed_fraction = p_hard * rates.hard + (1.0 - p_hard) * rates.easy;
  e.mean_crop_bytes = mean_crop_bytes(c.crops, c.frame.bytes_per_pixel);
  e.frame_bytes = static_cast<double>(c.frame.frame_bytes());

  const double meta = static_cast<double>(c.channel.result_metadata_bytes());
  const double jpb = c.channel.joules_per_byte();
  const double e_edge = c.edge_platform.joules_per_inference();
  const double e_cloud = c.cloud_platform.joules_per_inference();
  const double m = e.proposals_per_frame;
  const double rho = e.routed_fraction;

  const double up = m * rho * (e.mean_crop_bytes + meta);
  e.dtvr = up / e.frame_bytes;
  const double ours = m * (1.0 - rho) * e_edge + m * rho * e_cloud + up * jpb;
  const double centralized = m * e_cloud + e.frame_bytes * jpb;
  e.ecr = ours / centralized;
  return e;
}

ScenarioConfig calibrate(const CalibrationTarget& target, const ScenarioConfig& base) {
  base.validate();
  if (!(target.dtvr > 0.0) || !std::isfinite(target.dtvr)) {
    throw Error(ErrorCode::ValidationError, "DTVR target must be > 0", "target.dtvr");
  }
  if (!(target.ecr > 0.0) || !std::isfinite(target.ecr)) {
    throw Error(ErrorCode::ValidationError, "ECR target must be > 0", "target.ecr");
  }
  const auto& loc = base.oracles.localizer;
  if (loc.duplicate_rate > 0.0 && !(loc.min_duplicate_iou() > base.routing.nms_iou)) {
    throw Error(ErrorCode::ValidationError,
                "duplicates may survive NMS; the closed-form model needs min duplicate IoU > routing.nms_iou",
                "localizer.duplicate_shift_frac");
  }

  ScenarioConfig cfg = base;
  const double m = proposals_per_frame(cfg);
  const auto rates = routing_rates(cfg);
  const double rho_lo = std::min(rates.hard, rates.easy);
  const double rho_hi = std::max(rates.hard, rates.easy);
  const double frame_bytes = static_cast<double>(cfg.frame.frame_bytes());
  const double meta = static_cast<double>(cfg.channel.result_metadata_bytes());
  const double bpp = cfg.frame.bytes_per_pixel;

  auto crops_at = [&](double scale) {
    auto c = cfg.crops;
    c.scale = scale;
    return c;
  };
  // Routed fraction needed to hit the DTVR target at a given crop scale.
  auto needed_rho = [&](double scale) {
    return target.dtvr * frame_bytes / (m * (mean_crop_bytes(crops_at(scale), bpp) + meta));
  };
  const double scale_hi = std::min(static_cast<double>(cfg.frame.cell_width()) / cfg.crops.width_max,
                                   static_cast<double>(cfg.frame.cell_height()) / cfg.crops.height_max);
  const double scale_lo = 1e-6;
  auto dtvr_at = [&](double scale, double rho) {
    return m * rho * (mean_crop_bytes(crops_at(scale), bpp) + meta) / frame_bytes;
  };

  if (!(m > 0.0)) unattainable("DTVR", target.dtvr, 0.0, 0.0);

  // needed_rho is nonincreasing in scale.
  double scale = cfg.crops.scale;
  double rho = needed_rho(scale);
  if (rho > rho_hi) {
    if (needed_rho(scale_hi) > rho_hi) unattainable("DTVR", target.dtvr, dtvr_at(scale_lo, rho_lo), dtvr_at(scale_hi, rho_hi));
    double lo = scale, hi = scale_hi;  // invariant: needed_rho(hi) <= rho_hi
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (needed_rho(mid) <= rho_hi ? hi : lo) = mid;
    }
    scale = hi;
  } else if (rho < rho_lo) {
    if (needed_rho(scale_lo) < rho_lo) unattainable("DTVR", target.dtvr, dtvr_at(scale_lo, rho_lo), dtvr_at(scale_hi, rho_hi));
    double lo = scale_lo, hi = scale;  // invariant: needed_rho(lo) >= rho_lo
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (needed_rho(mid) >= rho_lo ? lo : hi) = mid;
    }
    scale = lo;
  }
  rho = needed_rho(scale);
  if (rho > rho_hi || rho < rho_lo) {
    unattainable("DTVR", target.dtvr, dtvr_at(scale_lo, rho_lo), dtvr_at(scale_hi, rho_hi));
  }
  if (rates.hard == rates.easy) {
    // Routing ignores hardness; only one routed fraction exists.
    if (std::abs(rho - rates.hard) > 1e-12) unattainable("DTVR", target.dtvr, dtvr_at(scale, rho_lo), dtvr_at(scale, rho_hi));
  } else {
    cfg.oracles.difficulty.p_hard = std::clamp((rho - rates.easy) / (rates.hard - rates.easy), 0.0, 1.0);
  }
  cfg.crops.scale = scale;

  // Energy identity: ecr * (m e_c + F j) = m (1-rho) e_e + m rho e_c + dtvr F j.
  const double achieved_dtvr = expected_metrics(cfg).dtvr;
  const double e_edge = cfg.edge_platform.joules_per_inference();
  const double e_cloud = cfg.cloud_platform.joules_per_inference();
  const double inference_ecr = ((1.0 - rho) * e_edge + rho * e_cloud) / e_cloud;  // ECR as j -> 0
  const double jpb = m * e_cloud * (inference_ecr - target.ecr) / (frame_bytes * (target.ecr - achieved_dtvr));
  if (!(jpb > 0.0) || !std::isfinite(jpb)) {
    unattainable("ECR", target.ecr, std::min(achieved_dtvr, inference_ecr), std::max(achieved_dtvr, inference_ecr));
  }
  cfg.channel = ChannelProfile(cfg.channel.bytes_per_second(), jpb, cfg.channel.result_metadata_bytes());
  cfg.validate();

  const auto check = expected_metrics(cfg);
  if (std::abs(check.dtvr - target.dtvr) > 1e-6 || std::abs(check.ecr - target.ecr) > 1e-6) {
    throw Error(ErrorCode::Unattainable, "calibration did not close: DTVR " + fmt(check.dtvr) + ", ECR " + fmt(check.ecr));
  }
  return cfg;
}

}  // namespace ecosense::harness
