#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ecosense/pipeline/scenario.hpp"

namespace ecosense::harness {

/// Scenario config document (JSON). Every section except `catalog` is
/// optional and falls back to ScenarioConfig defaults. Preset-backed
/// sections accept either a preset name or an inline object:
///
///   seed, frame_count                       integers
///   catalog       "seaships" | "smd-plus" | {"names": [...]}
///   frame         {width, height, bytes_per_pixel, grid_cols, grid_rows}
///   objects       {min, max}
///   crops         {width_min, width_max, height_min, height_max, scale}
///   classifiers   {edge, cloud}: preset name | {"rows": [[...]]}
///   difficulty    preset name | {p_hard, p_edge_correct_easy, p_edge_correct_hard, tpr, fpr}
///   localizer     {recall, duplicate_rate, jitter_px, duplicate_shift_frac}
///   routing       {tau, nms_iou, mode}
///   platforms     {edge, cloud}: platform name | {name, latency_ms, power_w, role}
///   channel       {bytes_per_second, joules_per_byte, result_metadata_bytes}
///
/// Keys starting with '_' are comments. Other unknown keys are rejected.
/// Errors: ParseError (not JSON), ValidationError (field path in
/// Error::field()), UnknownPreset.
pipeline::ScenarioConfig parse_config(const nlohmann::json& doc);
pipeline::ScenarioConfig parse_config_text(const std::string& text);
pipeline::ScenarioConfig load_config(const std::filesystem::path& path);

// Fully resolved document (presets inlined); parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const pipeline::ScenarioConfig& config);

// Hex SHA-256 of the canonical (sorted-key, compact) resolved document.
std::string config_digest(const pipeline::ScenarioConfig& config);

// Applies ECOSENSE_SEED from the environment when set.
void apply_seed_override(pipeline::ScenarioConfig& config);

}  // namespace ecosense::harness
