#include "ecosense/oracles/presets.hpp"

#include "ecosense/error.hpp"
#include "ecosense_presets_data.hpp"

namespace ecosense::oracles {

namespace {

const nlohmann::json& confusion_doc() {
  static const auto doc = nlohmann::json::parse(presets_data::kConfusionMatrices);
  return doc;
}

const nlohmann::json& difficulty_doc() {
  static const auto doc = nlohmann::json::parse(presets_data::kDifficultyModels);
  return doc;
}

const nlohmann::json& entry(const nlohmann::json& doc, std::string_view name, const char* kind) {
  const std::string key(name);
  if (key.empty() || key.front() == '_' || !doc.contains(key)) {
    throw Error(ErrorCode::UnknownPreset, std::string("no ") + kind + " preset named '" + key + "'");
  }
  return doc.at(key);
}

std::vector<std::string> names_of(const nlohmann::json& doc) {
  std::vector<std::string> out;
  for (const auto& [key, value] : doc.items()) {
    if (key.front() != '_') out.push_back(key);
  }
  return out;
}

}  // namespace

ConfusionMatrix confusion_preset(std::string_view name) {
  return entry(confusion_doc(), name, "confusion matrix").get<ConfusionMatrix>();
}

std::string confusion_preset_catalog(std::string_view name) {
  return entry(confusion_doc(), name, "confusion matrix").at("catalog").get<std::string>();
}

std::vector<std::string> confusion_preset_names() { return names_of(confusion_doc()); }

DifficultyModel difficulty_preset(std::string_view name) {
  return entry(difficulty_doc(), name, "difficulty model").get<DifficultyModel>();
}

std::vector<std::string> difficulty_preset_names() { return names_of(difficulty_doc()); }

}  // namespace ecosense::oracles
