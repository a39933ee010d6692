#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ecosense/accounting/ledger.hpp"
#include "ecosense/pipeline/scenario.hpp"

namespace ecosense::harness {

struct RunRecord {
  pipeline::Mode mode = pipeline::Mode::Collaborative;
  accounting::RunLedger ledger;
  accounting::SystemMetrics metrics;  // against the all-cloud run of the same frames

  bool operator==(const RunRecord&) const = default;
};

struct Report {
  std::string tool = "ecosense";
  std::string version;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::uint64_t frame_count = 0;
  std::vector<RunRecord> runs;  // collaborative, all-edge, all-cloud order

  bool operator==(const Report&) const = default;
};

std::string_view tool_version() noexcept;

// Runs each requested mode on the same frame stream. The all-cloud baseline
// is always simulated; it is listed only when requested. Modes run
// concurrently and are merged in canonical order.
Report run(const pipeline::ScenarioConfig& config, std::vector<pipeline::Mode> modes);

// Comma-separated mode names; duplicates collapse.
std::vector<pipeline::Mode> parse_modes(std::string_view text);

enum class Format { Json, Csv };

Format format_from_path(const std::filesystem::path& path);

// Metric names of the CSV body, in row order within each mode.
inline constexpr std::array<std::string_view, 17> kCsvMetrics = {
    "frames",         "proposals",      "edge_inferences", "cloud_inferences", "bytes_up",
    "bytes_down",     "edge_energy_j",  "comm_energy_j",   "cloud_energy_j",   "total_energy_j",
    "accuracy",       "dtvr",           "ecr",             "realtime_ok",      "breakdown_edge",
    "breakdown_comm", "breakdown_cloud"};

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);
// Header `mode,metric,value` then one row per (run, metric).
std::string report_to_csv(const Report& report);
std::string render(const Report& report, Format format);

// Throws IoError when the file cannot be written.
void emit(const Report& report, Format format, const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& body);

}  // namespace ecosense::harness

namespace ecosense::accounting {

void to_json(nlohmann::json& j, const RunLedger& l);
void from_json(const nlohmann::json& j, RunLedger& l);
void to_json(nlohmann::json& j, const SystemMetrics& m);
void from_json(const nlohmann::json& j, SystemMetrics& m);

}  // namespace ecosense::accounting
