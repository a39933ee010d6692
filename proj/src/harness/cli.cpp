#include "ecosense/harness/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ecosense/accounting/ledger.hpp"
#include "ecosense/accounting/platforms.hpp"
#include "ecosense/error.hpp"
#include "ecosense/harness/calibrate.hpp"
#include "ecosense/harness/config.hpp"
#include "ecosense/harness/report.hpp"
#include "ecosense/harness/sweep.hpp"

namespace ecosense::harness {

namespace {

namespace fs = std::filesystem;
using pipeline::ScenarioConfig;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unattainable:
      return kExitUnattainable;
    case ErrorCode::IoError:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

ScenarioConfig load(const std::string& path) {
  auto config = load_config(path);
  apply_seed_override(config);
  config.validate();
  return config;
}

std::optional<Format> parse_format(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorCode::ValidationError, "expected json or csv", "format");
}

// Writes to `path`, or to `out` when path is empty.
void deliver(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
  } else {
    write_text(path, body);
  }
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto config = load(path);
  const auto e = expected_metrics(config);
  out << "ok " << path << '\n'
      << "digest " << config_digest(config) << '\n'
      << "classes " << config.oracles.catalog.size() << ", frames " << config.frame_count << ", seed " << config.seed
      << '\n'
      << "expected collaborative dtvr " << fixed(e.dtvr, 6) << ", ecr " << fixed(e.ecr, 6) << '\n';
  return kExitOk;
}

int cmd_run(const std::string& path, const std::string& modes_text, const std::string& out_path,
            const std::string& format_text, std::ostream& out) {
  const auto config = load(path);
  const auto modes = parse_modes(modes_text);
  const auto format = parse_format(format_text).value_or(out_path.empty() ? Format::Json : format_from_path(out_path));
  const auto report = run(config, modes);
  deliver(render(report, format), out_path, out);
  if (!out_path.empty()) {
    out << "mode            dtvr      ecr       accuracy  realtime\n";
    for (const auto& r : report.runs) {
      std::string name(pipeline::to_string(r.mode));
      name.resize(16, ' ');
      out << name << fixed(r.metrics.dtvr, 6) << "  " << fixed(r.metrics.ecr, 6) << "  " << fixed(r.metrics.accuracy, 6)
          << "  " << (r.metrics.realtime_ok ? "yes" : "no") << '\n';
    }
    out << "wrote " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_sweep(const std::string& path, const std::string& param, const std::string& grid_text,
              const std::string& out_path, const std::string& format_text, std::ostream& out) {
  const auto config = load(path);
  const auto grid = parse_grid(grid_text);
  const auto points = sweep(config, param, grid);
  const auto format = parse_format(format_text).value_or(out_path.empty() ? Format::Csv : format_from_path(out_path));
  const std::string body = format == Format::Csv ? sweep_to_csv(points) : sweep_to_json(param, points).dump(2) + "\n";
  deliver(body, out_path, out);
  if (!out_path.empty()) out << "wrote " << points.size() << " points to " << out_path << '\n';
  return kExitOk;
}

int cmd_calibrate(const std::string& path, double dtvr, double ecr, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const auto base = load(path);
  const auto calibrated = calibrate({dtvr, ecr}, base);
  const auto e = expected_metrics(calibrated);
  auto doc = config_to_json(calibrated);
  doc["_calibrated"] = {{"target_dtvr", dtvr},
                        {"target_ecr", ecr},
                        {"note", "p_hard, crops.scale and channel.joules_per_byte are solved, not measured"}};
  deliver(doc.dump(2) + "\n", out_path, out);
  std::ostream& log = out_path.empty() ? err : out;
  log << "p_hard " << calibrated.oracles.difficulty.p_hard << ", crop scale " << calibrated.crops.scale
      << ", joules_per_byte " << calibrated.channel.joules_per_byte() << '\n'
      << "expected dtvr " << fixed(e.dtvr, 6) << ", ecr " << fixed(e.ecr, 6) << '\n';
  return kExitOk;
}

int cmd_platforms(bool as_json, std::ostream& out) {
  const auto& presets = accounting::platform_presets();
  if (as_json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : presets) {
      nlohmann::json row{{"name", p.name()},
                         {"role", std::string(to_string(p.role()))},
                         {"latency_ms", p.latency_ms()},
                         {"power_w", p.power_w()},
                         {"joules_per_inference", p.joules_per_inference()}};
      row["realtime_ok"] = p.role() == PlatformRole::Edge ? nlohmann::json(accounting::realtime_check(p)) : nullptr;
      rows.push_back(row);
    }
    out << nlohmann::json{{"bound_ms", accounting::kRealtimeBoundMs}, {"platforms", rows}}.dump(2) << '\n';
    return kExitOk;
  }
  out << "platform      role   latency_ms  power_w  J/inference  realtime(<" << accounting::kRealtimeBoundMs << " ms)\n";
  for (const auto& p : presets) {
    std::string name = p.name();
    name.resize(14, ' ');
    std::string role(to_string(p.role()));
    role.resize(7, ' ');
    std::string lat = fixed(p.latency_ms(), 2);
    lat.insert(0, lat.size() < 10 ? 10 - lat.size() : 0, ' ');
    std::string pw = fixed(p.power_w(), 2);
    pw.insert(0, pw.size() < 9 ? 9 - pw.size() : 0, ' ');
    std::string jpi = fixed(p.joules_per_inference(), 5);
    jpi.insert(0, jpi.size() < 13 ? 13 - jpi.size() : 0, ' ');
    const char* verdict = p.role() == PlatformRole::Edge ? (accounting::realtime_check(p) ? "pass" : "fail") : "-";
    out << name << role << lat << pw << jpi << "  " << verdict << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-cloud collaborative inference simulator", "ecosense"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string cfg, modes = "collaborative,all-edge,all-cloud", out_path, format, param = "routing.tau", grid;
  double dtvr = 0.0, ecr = 0.0;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Check a scenario config");
  validate->add_option("config", cfg, "Config path")->required();

  auto* run_cmd = app.add_subcommand("run", "Simulate modes and write a report");
  run_cmd->add_option("config", cfg, "Config path")->required();
  run_cmd->add_option("--modes", modes, "Comma-separated modes")->capture_default_str();
  run_cmd->add_option("--out", out_path, "Report path (.json or .csv); stdout when omitted");
  run_cmd->add_option("--format", format, "json or csv (default from --out extension)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the collaborative mode over a parameter grid");
  sweep_cmd->add_option("config", cfg, "Config path")->required();
  sweep_cmd->add_option("--param", param, "Dotted numeric config field")->capture_default_str();
  sweep_cmd->add_option("--grid", grid, "start:stop:step")->required();
  sweep_cmd->add_option("--out", out_path, "Output path (.json or .csv); stdout when omitted");
  sweep_cmd->add_option("--format", format, "json or csv");

  auto* calib = app.add_subcommand("calibrate", "Solve free parameters for DTVR/ECR targets");
  calib->add_option("config", cfg, "Base config path")->required();
  calib->add_option("--dtvr", dtvr, "Target DTVR")->required();
  calib->add_option("--ecr", ecr, "Target ECR")->required();
  calib->add_option("--out", out_path, "Calibrated config path; stdout when omitted");

  auto* platforms = app.add_subcommand("platforms", "List platform presets with realtime verdicts");
  platforms->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (run_cmd->parsed()) return cmd_run(cfg, modes, out_path, format, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, param, grid, out_path, format, out);
    if (calib->parsed()) return cmd_calibrate(cfg, dtvr, ecr, out_path, out, err);
    return cmd_platforms(as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ecosense::harness
