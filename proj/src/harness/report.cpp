#include "ecosense/harness/report.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "ecosense/error.hpp"
#include "ecosense/harness/config.hpp"

#ifndef ECOSENSE_VERSION
#define ECOSENSE_VERSION "0.0.0"
#endif

namespace ecosense::accounting {

using nlohmann::json;

void to_json(json& j, const RunLedger& l) {
  j = json{{"frames", l.frames},
           {"proposals", l.proposals},
           {"edge_inferences", l.edge_inferences},
           {"cloud_inferences", l.cloud_inferences},
           {"bytes_up", l.bytes_up},
           {"bytes_down", l.bytes_down},
           {"edge_energy_j", l.edge_energy_j},
           {"comm_energy_j", l.comm_energy_j},
           {"cloud_energy_j", l.cloud_energy_j},
           {"edge_busy_ms", l.edge_busy_ms},
           {"cloud_busy_ms", l.cloud_busy_ms},
           {"uplink_ms", l.uplink_ms},
           {"correct", l.correct},
           {"class_correct", l.class_correct},
           {"class_total", l.class_total}};
}

void from_json(const json& j, RunLedger& l) {
  j.at("frames").get_to(l.frames);
  j.at("proposals").get_to(l.proposals);
  j.at("edge_inferences").get_to(l.edge_inferences);
  j.at("cloud_inferences").get_to(l.cloud_inferences);
  j.at("bytes_up").get_to(l.bytes_up);
  j.at("bytes_down").get_to(l.bytes_down);
  j.at("edge_energy_j").get_to(l.edge_energy_j);
  j.at("comm_energy_j").get_to(l.comm_energy_j);
  j.at("cloud_energy_j").get_to(l.cloud_energy_j);
  j.at("edge_busy_ms").get_to(l.edge_busy_ms);
  j.at("cloud_busy_ms").get_to(l.cloud_busy_ms);
  j.at("uplink_ms").get_to(l.uplink_ms);
  j.at("correct").get_to(l.correct);
  j.at("class_correct").get_to(l.class_correct);
  j.at("class_total").get_to(l.class_total);
}

void to_json(json& j, const SystemMetrics& m) {
  j = json{{"dtvr", m.dtvr}, {"ecr", m.ecr}, {"accuracy", m.accuracy}, {"realtime_ok", m.realtime_ok}};
  if (m.breakdown) {
    j["breakdown"] = {{"edge", m.breakdown->edge}, {"comm", m.breakdown->comm}, {"cloud", m.breakdown->cloud}};
  } else {
    j["breakdown"] = nullptr;
  }
}

void from_json(const json& j, SystemMetrics& m) {
  j.at("dtvr").get_to(m.dtvr);
  j.at("ecr").get_to(m.ecr);
  j.at("accuracy").get_to(m.accuracy);
  j.at("realtime_ok").get_to(m.realtime_ok);
  const auto& b = j.at("breakdown");
  if (b.is_null()) {
    m.breakdown.reset();
  } else {
    m.breakdown = Breakdown{b.at("edge").get<double>(), b.at("comm").get<double>(), b.at("cloud").get<double>()};
  }
}

}  // namespace ecosense::accounting

namespace ecosense::harness {

using nlohmann::json;
using pipeline::Mode;
using pipeline::ScenarioConfig;

std::string_view tool_version() noexcept { return ECOSENSE_VERSION; }

namespace {

accounting::RunLedger simulate(const ScenarioConfig& config, Mode mode) {
  const auto frames = pipeline::run_scenario(config, mode);
  return accounting::build_ledger(frames, config.oracles.catalog.size(), config.edge_platform, config.cloud_platform,
                                  config.channel);
}

}  // namespace

Report run(const ScenarioConfig& config, std::vector<Mode> modes) {
  config.validate();
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());

  std::vector<Mode> needed = modes;
  if (std::find(needed.begin(), needed.end(), Mode::AllCloud) == needed.end()) needed.push_back(Mode::AllCloud);

  std::map<Mode, std::future<accounting::RunLedger>> pending;
  for (Mode m : needed) pending.emplace(m, std::async(std::launch::async, simulate, std::cref(config), m));
  std::map<Mode, accounting::RunLedger> ledgers;
  for (auto& [m, f] : pending) ledgers.emplace(m, f.get());

  const auto& central = ledgers.at(Mode::AllCloud);
  Report report;
  report.version = std::string(tool_version());
  report.config_digest = config_digest(config);
  report.seed = config.seed;
  report.frame_count = config.frame_count;
  for (Mode m : modes) {
    const auto& ledger = ledgers.at(m);
    report.runs.push_back(
        {m, ledger, accounting::compute_metrics(ledger, central, config.edge_platform, m != Mode::AllCloud)});
  }
  return report;
}

std::vector<Mode> parse_modes(std::string_view text) {
  std::vector<Mode> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, comma - start);
    if (token.empty()) throw Error(ErrorCode::ValidationError, "empty mode name", "modes");
    Mode m{};
    try {
      m = pipeline::mode_from_string(token);
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, e.what(), "modes");
    }
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Format format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? Format::Csv : Format::Json;
}

json report_to_json(const Report& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"mode", std::string(pipeline::to_string(run.mode))}, {"ledger", run.ledger}, {"metrics", run.metrics}});
  }
  return json{{"tool", r.tool},
              {"version", r.version},
              {"config_digest", r.config_digest},
              {"seed", r.seed},
              {"frame_count", r.frame_count},
              {"runs", runs}};
}

Report report_from_json(const json& doc) {
  try {
    Report r;
    doc.at("tool").get_to(r.tool);
    doc.at("version").get_to(r.version);
    doc.at("config_digest").get_to(r.config_digest);
    doc.at("seed").get_to(r.seed);
    doc.at("frame_count").get_to(r.frame_count);
    for (const auto& run : doc.at("runs")) {
      r.runs.push_back({pipeline::mode_from_string(run.at("mode").get<std::string>()),
                        run.at("ledger").get<accounting::RunLedger>(),
                        run.at("metrics").get<accounting::SystemMetrics>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "mode,metric,value\n";
  for (const auto& run : r.runs) {
    const auto& l = run.ledger;
    const auto& m = run.metrics;
    const json b = m.breakdown ? json{m.breakdown->edge, m.breakdown->comm, m.breakdown->cloud}
                               : json{nullptr, nullptr, nullptr};
    // Same number rendering as the JSON body.
    const std::array<json, kCsvMetrics.size()> values = {
        l.frames,         l.proposals,        l.edge_inferences, l.cloud_inferences,
        l.bytes_up,       l.bytes_down,       l.edge_energy_j,   l.comm_energy_j,
        l.cloud_energy_j, l.total_energy_j(), m.accuracy,        m.dtvr,
        m.ecr,            m.realtime_ok ? 1 : 0, b[0],           b[1],
        b[2]};
    for (std::size_t i = 0; i < kCsvMetrics.size(); ++i) {
      os << pipeline::to_string(run.mode) << ',' << kCsvMetrics[i] << ',';
      if (!values[i].is_null()) os << values[i].dump();
      os << '\n';
    }
  }
  return os.str();
}

std::string render(const Report& report, Format format) {
  return format == Format::Csv ? report_to_csv(report) : report_to_json(report).dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << body;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

void emit(const Report& report, Format format, const std::filesystem::path& path) {
  write_text(path, render(report, format));
}

}  // namespace ecosense::harness
