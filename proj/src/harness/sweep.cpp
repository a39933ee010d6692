#include "ecosense/harness/sweep.hpp"

#include <charconv>
#include <cmath>
#include <future>
#include <sstream>

#include "ecosense/error.hpp"
#include "ecosense/harness/config.hpp"
#include "ecosense/harness/report.hpp"

namespace ecosense::harness {

using nlohmann::json;
using pipeline::Mode;
using pipeline::ScenarioConfig;

namespace {

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw Error(ErrorCode::ValidationError, "bad number '" + std::string(text) + "'", "grid");
  }
  return v;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos || text.find(':', b + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ValidationError, "expected start:stop:step", "grid");
  }
  const double start = parse_number(text.substr(0, a));
  const double stop = parse_number(text.substr(a + 1, b - a - 1));
  const double step = parse_number(text.substr(b + 1));
  if (!(step > 0.0)) throw Error(ErrorCode::ValidationError, "step must be > 0", "grid");
  if (stop < start) throw Error(ErrorCode::ValidationError, "stop must be >= start", "grid");
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  if (n > 1'000'000) throw Error(ErrorCode::ValidationError, "too many grid points", "grid");
  std::vector<double> out;
  out.reserve(n + 1);
  // Multiply rather than accumulate so 0:1:0.05 ends at exactly 1.
  for (std::size_t i = 0; i <= n; ++i) out.push_back(std::min(stop, start + static_cast<double>(i) * step));
  return out;
}

ScenarioConfig with_param(const ScenarioConfig& config, const std::string& param, double value) {
  json doc = config_to_json(config);
  std::string pointer = "/" + param;
  for (auto& c : pointer) {
    if (c == '.') c = '/';
  }
  const json::json_pointer ptr(pointer);
  if (param.empty() || !doc.contains(ptr) || !doc.at(ptr).is_number()) {
    throw Error(ErrorCode::ValidationError, "not a numeric config field", param);
  }
  if (doc.at(ptr).is_number_integer()) {
    if (value < 0.0 || value != std::floor(value)) {
      throw Error(ErrorCode::ValidationError, "integer field needs a nonnegative whole value", param);
    }
    doc[ptr] = static_cast<std::uint64_t>(value);
  } else {
    doc[ptr] = value;
  }
  return parse_config(doc);
}

std::vector<SweepPoint> sweep(const ScenarioConfig& config, const std::string& param, const std::vector<double>& grid) {
  std::vector<ScenarioConfig> configs;
  configs.reserve(grid.size());
  for (double v : grid) configs.push_back(with_param(config, param, v));

  std::vector<std::future<Report>> pending;
  pending.reserve(configs.size());
  for (const auto& c : configs) {
    pending.push_back(std::async(std::launch::async, [&c] { return run(c, {Mode::Collaborative}); }));
  }
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto report = pending[i].get();
    out.push_back({grid[i], report.runs.front().ledger, report.runs.front().metrics});
  }
  return out;
}

json sweep_to_json(const std::string& param, const std::vector<SweepPoint>& points) {
  json rows = json::array();
  for (const auto& p : points) rows.push_back({{"value", p.value}, {"ledger", p.ledger}, {"metrics", p.metrics}});
  return json{{"param", param}, {"points", rows}};
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream os;
  os << "value,dtvr,ecr,accuracy,bytes_up,cloud_inferences,edge_inferences\n";
  for (const auto& p : points) {
    os << json(p.value).dump() << ',' << json(p.metrics.dtvr).dump() << ',' << json(p.metrics.ecr).dump() << ','
       << json(p.metrics.accuracy).dump() << ',' << p.ledger.bytes_up << ',' << p.ledger.cloud_inferences << ','
       << p.ledger.edge_inferences << '\n';
  }
  return os.str();
}

}  // namespace ecosense::harness
