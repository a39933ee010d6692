#pragma once

#include <string_view>
#include <vector>

#include "ecosense/domain/types.hpp"

namespace ecosense::accounting {

// Measured latency/power of every front-end (edge) and back-end (cloud)
// platform, in table order. Compiled in from data/presets/platforms.json.
const std::vector<PlatformProfile>& platform_presets();

// Throws Error(UnknownPreset) for an unknown name.
const PlatformProfile& platform_preset(std::string_view name);

}  // namespace ecosense::accounting
