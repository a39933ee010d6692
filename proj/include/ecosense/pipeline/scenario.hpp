#pragma once

#include <cstdint>
#include <vector>

#include "ecosense/domain/types.hpp"
#include "ecosense/oracles/rng.hpp"
#include "ecosense/pipeline/pipeline.hpp"

namespace ecosense::pipeline {

struct FrameGeometry {
  std::uint32_t width = 1920;
  std::uint32_t height = 1080;
  double bytes_per_pixel = kDefaultBytesPerPixel;
  // Objects are placed in distinct cells of a grid_cols x grid_rows layout.
  std::uint32_t grid_cols = 2;
  std::uint32_t grid_rows = 2;

  std::uint32_t cell_width() const noexcept { return width / grid_cols; }
  std::uint32_t cell_height() const noexcept { return height / grid_rows; }
  Bytes frame_bytes() const;

  bool operator==(const FrameGeometry&) const = default;
};

// Objects per frame, uniform over [min, max].
struct ObjectCountRange {
  std::uint32_t min = 1;
  std::uint32_t max = 3;

  double mean() const noexcept { return 0.5 * (static_cast<double>(min) + static_cast<double>(max)); }
  bool operator==(const ObjectCountRange&) const = default;
};

// Box side lengths: round(scale * u) pixels with u uniform over the integer
// range [min, max] of each side.
struct CropSizeModel {
  std::uint32_t width_min = 320;
  std::uint32_t width_max = 720;
  std::uint32_t height_min = 200;
  std::uint32_t height_max = 520;
  double scale = 1.0;

  std::uint32_t scaled(std::uint32_t side) const;
  bool operator==(const CropSizeModel&) const = default;
};

struct ScenarioConfig {
  std::uint64_t seed = 0;
  std::uint64_t frame_count = 0;
  FrameGeometry frame;
  ObjectCountRange objects;
  CropSizeModel crops;
  OracleSet oracles;
  RoutingPolicy routing;
  PlatformProfile edge_platform{"TPU Dev", 9.0, 3.47, PlatformRole::Edge};
  PlatformProfile cloud_platform{"Alveo U200", 16.8, 17.8, PlatformRole::Cloud};
  ChannelProfile channel{12.5e6, 1e-7, 64};

  // Throws Error(ValidationError) with the dotted path of the first bad field.
  void validate() const;
  TransferModel transfer() const noexcept { return {frame.bytes_per_pixel, channel.result_metadata_bytes()}; }
  bool operator==(const ScenarioConfig&) const = default;
};

// Ground-truth frame `index` of a scenario; depends only on (seed, index).
Frame generate_frame(const ScenarioConfig& config, std::uint64_t index);

// Runs every frame in order with config.routing. Each frame uses its own
// substream derived from (seed, frame index).
std::vector<FrameResult> run_scenario(const ScenarioConfig& config);
std::vector<FrameResult> run_scenario(const ScenarioConfig& config, Mode mode);

}  // namespace ecosense::pipeline
