#include "ecosense/pipeline/scenario.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ecosense/error.hpp"

namespace ecosense::pipeline {

namespace {

enum StreamTag : std::uint64_t { kFrameStream = 11, kSceneStream = 12, kPipelineStream = 13 };

[[noreturn]] void invalid(const std::string& field, const std::string& reason) {
  throw Error(ErrorCode::ValidationError, reason, field);
}

// Re-raises any validation failure of `fn` under the config path `prefix`.
template <typename Fn>
void scoped(const std::string& prefix, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError && !e.field().empty() &&
        e.field().rfind(prefix, 0) == 0) {
      throw;
    }
    const std::string field = e.field().empty() ? prefix : prefix + "." + e.field();
    const std::string what = e.what();
    invalid(field, what.substr(what.find(": ") + 2));
  }
}

}  // namespace

Bytes FrameGeometry::frame_bytes() const {
  return static_cast<Bytes>(std::ceil(static_cast<double>(width) * height * bytes_per_pixel));
}

std::uint32_t CropSizeModel::scaled(std::uint32_t side) const {
  const double v = std::round(scale * static_cast<double>(side));
  return v < 1.0 ? 1u : static_cast<std::uint32_t>(v);
}

void ScenarioConfig::validate() const {
  if (frame.width == 0) invalid("frame.width", "must be > 0");
  if (frame.height == 0) invalid("frame.height", "must be > 0");
  if (!(frame.bytes_per_pixel > 0.0) || !std::isfinite(frame.bytes_per_pixel)) {
    invalid("frame.bytes_per_pixel", "must be > 0");
  }
  if (frame.grid_cols == 0 || frame.grid_cols > frame.width) invalid("frame.grid_cols", "must lie in [1, width]");
  if (frame.grid_rows == 0 || frame.grid_rows > frame.height) invalid("frame.grid_rows", "must lie in [1, height]");

  if (objects.min > objects.max) invalid("objects.min", "must be <= objects.max");
  if (static_cast<std::uint64_t>(objects.max) >
      static_cast<std::uint64_t>(frame.grid_cols) * frame.grid_rows) {
    invalid("objects.max", "exceeds the number of grid cells");
  }

  if (crops.width_min == 0 || crops.width_min > crops.width_max) {
    invalid("crops.width_min", "must lie in [1, width_max]");
  }
  if (crops.height_min == 0 || crops.height_min > crops.height_max) {
    invalid("crops.height_min", "must lie in [1, height_max]");
  }
  if (!(crops.scale > 0.0) || !std::isfinite(crops.scale)) invalid("crops.scale", "must be > 0");
  if (crops.scaled(crops.width_max) > frame.cell_width()) {
    invalid("crops.width_max", "scaled crop width exceeds the grid cell width");
  }
  if (crops.scaled(crops.height_max) > frame.cell_height()) {
    invalid("crops.height_max", "scaled crop height exceeds the grid cell height");
  }

  if (oracles.edge.classes() != oracles.catalog.size()) {
    invalid("classifiers.edge", "class count does not match the catalog");
  }
  if (oracles.cloud.classes() != oracles.catalog.size()) {
    invalid("classifiers.cloud", "class count does not match the catalog");
  }
  scoped("difficulty", [&] { oracles.difficulty.validate(); });
  scoped("localizer", [&] { oracles.localizer.validate(); });
  routing.validate();

  if (edge_platform.role() != PlatformRole::Edge) invalid("platforms.edge", "platform role must be edge");
  if (cloud_platform.role() != PlatformRole::Cloud) invalid("platforms.cloud", "platform role must be cloud");
}

Frame generate_frame(const ScenarioConfig& config, std::uint64_t index) {
  auto rng = oracles::SeededRng(config.seed).derive({kFrameStream, index}).derive({kSceneStream});
  const auto& geo = config.frame;
  const auto count = static_cast<std::uint32_t>(rng.uniform_int(config.objects.min, config.objects.max));

  // Partial Fisher-Yates over grid cells.
  std::vector<std::uint32_t> cells(static_cast<std::size_t>(geo.grid_cols) * geo.grid_rows);
  std::iota(cells.begin(), cells.end(), 0u);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto j = rng.uniform_int(i, cells.size() - 1);
    std::swap(cells[i], cells[j]);
  }

  const auto cw = geo.cell_width();
  const auto ch = geo.cell_height();
  const auto classes = config.oracles.catalog.size();
  std::vector<Proposal> objects;
  objects.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto w = config.crops.scaled(static_cast<std::uint32_t>(rng.uniform_int(config.crops.width_min, config.crops.width_max)));
    const auto h = config.crops.scaled(static_cast<std::uint32_t>(rng.uniform_int(config.crops.height_min, config.crops.height_max)));
    const auto cls = static_cast<ClassIndex>(rng.uniform_int(0, classes - 1));
    const auto cell_x = (cells[i] % geo.grid_cols) * cw;
    const auto cell_y = (cells[i] / geo.grid_cols) * ch;
    const auto x = static_cast<double>(cell_x + rng.uniform_int(0, cw - w));
    const auto y = static_cast<double>(cell_y + rng.uniform_int(0, ch - h));
    objects.push_back(Proposal::from_box(BoundingBox(x, y, x + w, y + h), 1.0, cls, geo.bytes_per_pixel));
  }
  return Frame(index, geo.width, geo.height, geo.frame_bytes(), std::move(objects));
}

std::vector<FrameResult> run_scenario(const ScenarioConfig& config) {
  config.validate();
  const oracles::SeededRng root(config.seed);
  const auto transfer = config.transfer();
  std::vector<FrameResult> results;
  results.reserve(config.frame_count);
  for (std::uint64_t i = 0; i < config.frame_count; ++i) {
    try {
      const auto frame = generate_frame(config, i);
      results.push_back(process_frame(frame, config.routing, config.oracles, transfer,
                                      root.derive({kFrameStream, i}).derive({kPipelineStream})));
    } catch (const Error& e) {
      throw Error(e.code(), "frame " + std::to_string(i) + ": " + e.what(), e.field());
    }
  }
  return results;
}

std::vector<FrameResult> run_scenario(const ScenarioConfig& config, Mode mode) {
  auto copy = config;
  copy.routing.mode = mode;
  return run_scenario(copy);
}

}  // namespace ecosense::pipeline
