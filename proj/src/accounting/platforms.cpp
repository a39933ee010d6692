#include "ecosense/accounting/platforms.hpp"

#include <string>

#include "ecosense/domain/json.hpp"
#include "ecosense/error.hpp"
#include "ecosense_presets_data.hpp"

namespace ecosense::accounting {

const std::vector<PlatformProfile>& platform_presets() {
  static const auto presets = [] {
    const auto doc = nlohmann::json::parse(presets_data::kPlatforms);
    std::vector<PlatformProfile> out;
    for (const auto& p : doc.at("platforms")) out.push_back(p.get<PlatformProfile>());
    return out;
  }();
  return presets;
}

const PlatformProfile& platform_preset(std::string_view name) {
  for (const auto& p : platform_presets()) {
    if (p.name() == name) return p;
  }
  throw Error(ErrorCode::UnknownPreset, "no platform named '" + std::string(name) + "'");
}

}  // namespace ecosense::accounting
