#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ecosense/accounting/ledger.hpp"
#include "ecosense/pipeline/scenario.hpp"

namespace ecosense::harness {

// "start:stop:step", inclusive of stop up to rounding; step > 0.
std::vector<double> parse_grid(std::string_view text);

// Copy of `config` with the dotted numeric field (e.g. "routing.tau") set.
// Throws ValidationError when the path does not name a numeric field or the
// result is invalid.
pipeline::ScenarioConfig with_param(const pipeline::ScenarioConfig& config, const std::string& param, double value);

struct SweepPoint {
  double value = 0.0;
  accounting::RunLedger ledger;  // collaborative run
  accounting::SystemMetrics metrics;

  bool operator==(const SweepPoint&) const = default;
};

// One collaborative run per grid value against that point's all-cloud
// baseline. Points run concurrently; output follows grid order.
std::vector<SweepPoint> sweep(const pipeline::ScenarioConfig& config, const std::string& param,
                              const std::vector<double>& grid);

nlohmann::json sweep_to_json(const std::string& param, const std::vector<SweepPoint>& points);
// Header `value,dtvr,ecr,accuracy,bytes_up,cloud_inferences,edge_inferences`.
std::string sweep_to_csv(const std::vector<SweepPoint>& points);

}  // namespace ecosense::harness
