#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecosense/oracles/models.hpp"

namespace ecosense::oracles {

// Built-in presets, compiled in from data/presets/. Unknown names throw
// Error(UnknownPreset).
ConfusionMatrix confusion_preset(std::string_view name);
// Catalog preset name a confusion-matrix preset was built for.
std::string confusion_preset_catalog(std::string_view name);
std::vector<std::string> confusion_preset_names();

DifficultyModel difficulty_preset(std::string_view name);
std::vector<std::string> difficulty_preset_names();

}  // namespace ecosense::oracles
