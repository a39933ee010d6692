#include "ecosense/harness/config.hpp"

#include <openssl/evp.h>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "ecosense/accounting/platforms.hpp"
#include "ecosense/domain/json.hpp"
#include "ecosense/error.hpp"
#include "ecosense/oracles/presets.hpp"

namespace ecosense::harness {

using nlohmann::json;
using pipeline::ScenarioConfig;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& reason) {
  throw Error(ErrorCode::ValidationError, reason, field);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Typed access to one JSON object with error messages carrying its path.
class Section {
 public:
  Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) invalid(path_.empty() ? "<root>" : path_, "expected an object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : doc_.items()) {
      if (!key.empty() && key.front() == '_') continue;
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) invalid(join(path_, key), "unknown key");
    }
  }

  bool has(const char* key) const { return doc_.contains(key); }
  const json& raw(const char* key) const { return doc_.at(key); }
  std::string path(const char* key) const { return join(path_, key); }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const auto& v = doc_.at(key);
    if (!v.is_number()) invalid(path(key), "expected a number");
    return v.get<double>();
  }

  template <typename UInt>
  UInt unsigned_int(const char* key, UInt fallback) const {
    if (!has(key)) return fallback;
    const auto& v = doc_.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      invalid(path(key), "expected a nonnegative integer");
    }
    const auto u = v.get<std::uint64_t>();
    if (u > std::numeric_limits<UInt>::max()) invalid(path(key), "integer out of range");
    return static_cast<UInt>(u);
  }

  std::string text(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const auto& v = doc_.at(key);
    if (!v.is_string()) invalid(path(key), "expected a string");
    return v.get<std::string>();
  }

 private:
  const json& doc_;
  std::string path_;
};

// Runs `make`, converting constructor/JSON failures into ValidationError at `field`.
template <typename Fn>
auto guarded(const std::string& field, Fn&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownPreset || e.code() == ErrorCode::ValidationError) throw;
    const std::string what = e.what();
    const std::string sub = e.field().empty() ? field : field + "." + e.field();
    invalid(sub, what.substr(what.find(": ") + 2));
  } catch (const json::exception& e) {
    invalid(field, e.what());
  }
}

ClassCatalog read_catalog(const json& v, const std::string& field) {
  if (v.is_string()) return ClassCatalog::preset(v.get<std::string>());
  return guarded(field, [&] {
    Section(v, field).allow_only({"names"});
    return v.get<ClassCatalog>();
  });
}

oracles::ConfusionMatrix read_matrix(const json& v, const std::string& field) {
  if (v.is_string()) return oracles::confusion_preset(v.get<std::string>());
  return guarded(field, [&] {
    Section(v, field).allow_only({"rows"});
    return v.get<oracles::ConfusionMatrix>();
  });
}

PlatformProfile read_platform(const json& v, const std::string& field) {
  if (v.is_string()) return accounting::platform_preset(v.get<std::string>());
  return guarded(field, [&] {
    Section(v, field).allow_only({"name", "latency_ms", "power_w", "role"});
    return v.get<PlatformProfile>();
  });
}

}  // namespace

ScenarioConfig parse_config(const json& doc) {
  ScenarioConfig cfg;
  const Section root(doc, "");
  root.allow_only({"seed", "frame_count", "catalog", "frame", "objects", "crops", "classifiers",
                   "difficulty", "localizer", "routing", "platforms", "channel"});

  cfg.seed = root.unsigned_int<std::uint64_t>("seed", 0);
  cfg.frame_count = root.unsigned_int<std::uint64_t>("frame_count", 0);
  if (!root.has("catalog")) invalid("catalog", "required");
  cfg.oracles.catalog = read_catalog(root.raw("catalog"), "catalog");

  if (root.has("frame")) {
    const Section s(root.raw("frame"), "frame");
    s.allow_only({"width", "height", "bytes_per_pixel", "grid_cols", "grid_rows"});
    cfg.frame.width = s.unsigned_int("width", cfg.frame.width);
    cfg.frame.height = s.unsigned_int("height", cfg.frame.height);
    cfg.frame.bytes_per_pixel = s.number("bytes_per_pixel", cfg.frame.bytes_per_pixel);
    cfg.frame.grid_cols = s.unsigned_int("grid_cols", cfg.frame.grid_cols);
    cfg.frame.grid_rows = s.unsigned_int("grid_rows", cfg.frame.grid_rows);
  }
  if (root.has("objects")) {
    const Section s(root.raw("objects"), "objects");
    s.allow_only({"min", "max"});
    cfg.objects.min = s.unsigned_int("min", cfg.objects.min);
    cfg.objects.max = s.unsigned_int("max", cfg.objects.max);
  }
  if (root.has("crops")) {
    const Section s(root.raw("crops"), "crops");
    s.allow_only({"width_min", "width_max", "height_min", "height_max", "scale"});
    cfg.crops.width_min = s.unsigned_int("width_min", cfg.crops.width_min);
    cfg.crops.width_max = s.unsigned_int("width_max", cfg.crops.width_max);
    cfg.crops.height_min = s.unsigned_int("height_min", cfg.crops.height_min);
    cfg.crops.height_max = s.unsigned_int("height_max", cfg.crops.height_max);
    cfg.crops.scale = s.number("scale", cfg.crops.scale);
  }

  // Default classifiers follow the catalog size.
  cfg.oracles.edge = oracles::ConfusionMatrix::identity(cfg.oracles.catalog.size());
  cfg.oracles.cloud = oracles::ConfusionMatrix::identity(cfg.oracles.catalog.size());
  if (root.has("classifiers")) {
    const Section s(root.raw("classifiers"), "classifiers");
    s.allow_only({"edge", "cloud"});
    if (s.has("edge")) cfg.oracles.edge = read_matrix(s.raw("edge"), "classifiers.edge");
    if (s.has("cloud")) cfg.oracles.cloud = read_matrix(s.raw("cloud"), "classifiers.cloud");
  }

  if (root.has("difficulty")) {
    const auto& v = root.raw("difficulty");
    if (v.is_string()) {
      cfg.oracles.difficulty = oracles::difficulty_preset(v.get<std::string>());
    } else {
      const Section s(v, "difficulty");
      s.allow_only({"p_hard", "p_edge_correct_easy", "p_edge_correct_hard", "tpr", "fpr"});
      auto& d = cfg.oracles.difficulty;
      d.p_hard = s.number("p_hard", d.p_hard);
      d.p_edge_correct_easy = s.number("p_edge_correct_easy", d.p_edge_correct_easy);
      d.p_edge_correct_hard = s.number("p_edge_correct_hard", d.p_edge_correct_hard);
      d.tpr = s.number("tpr", d.tpr);
      d.fpr = s.number("fpr", d.fpr);
    }
  }
  if (root.has("localizer")) {
    const Section s(root.raw("localizer"), "localizer");
    s.allow_only({"recall", "duplicate_rate", "jitter_px", "duplicate_shift_frac"});
    auto& l = cfg.oracles.localizer;
    l.recall = s.number("recall", l.recall);
    l.duplicate_rate = s.number("duplicate_rate", l.duplicate_rate);
    l.jitter_px = s.number("jitter_px", l.jitter_px);
    l.duplicate_shift_frac = s.number("duplicate_shift_frac", l.duplicate_shift_frac);
  }
  if (root.has("routing")) {
    const Section s(root.raw("routing"), "routing");
    s.allow_only({"tau", "nms_iou", "mode"});
    cfg.routing.tau = s.number("tau", cfg.routing.tau);
    cfg.routing.nms_iou = s.number("nms_iou", cfg.routing.nms_iou);
    if (s.has("mode")) {
      cfg.routing.mode = guarded(s.path("mode"), [&] {
        return pipeline::mode_from_string(s.text("mode", ""));
      });
    }
  }
  if (root.has("platforms")) {
    const Section s(root.raw("platforms"), "platforms");
    s.allow_only({"edge", "cloud"});
    if (s.has("edge")) cfg.edge_platform = read_platform(s.raw("edge"), "platforms.edge");
    if (s.has("cloud")) cfg.cloud_platform = read_platform(s.raw("cloud"), "platforms.cloud");
  }
  if (root.has("channel")) {
    const Section s(root.raw("channel"), "channel");
    s.allow_only({"bytes_per_second", "joules_per_byte", "result_metadata_bytes"});
    const double bps = s.number("bytes_per_second", cfg.channel.bytes_per_second());
    const double jpb = s.number("joules_per_byte", cfg.channel.joules_per_byte());
    const auto meta = s.unsigned_int<Bytes>("result_metadata_bytes", cfg.channel.result_metadata_bytes());
    cfg.channel = guarded("channel", [&] { return ChannelProfile(bps, jpb, meta); });
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return parse_config(doc);
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json config_to_json(const ScenarioConfig& c) {
  return json{
      {"seed", c.seed},
      {"frame_count", c.frame_count},
      {"catalog", c.oracles.catalog},
      {"frame",
       {{"width", c.frame.width},
        {"height", c.frame.height},
        {"bytes_per_pixel", c.frame.bytes_per_pixel},
        {"grid_cols", c.frame.grid_cols},
        {"grid_rows", c.frame.grid_rows}}},
      {"objects", {{"min", c.objects.min}, {"max", c.objects.max}}},
      {"crops",
       {{"width_min", c.crops.width_min},
        {"width_max", c.crops.width_max},
        {"height_min", c.crops.height_min},
        {"height_max", c.crops.height_max},
        {"scale", c.crops.scale}}},
      {"classifiers", {{"edge", c.oracles.edge}, {"cloud", c.oracles.cloud}}},
      {"difficulty", c.oracles.difficulty},
      {"localizer", c.oracles.localizer},
      {"routing",
       {{"tau", c.routing.tau},
        {"nms_iou", c.routing.nms_iou},
        {"mode", std::string(pipeline::to_string(c.routing.mode))}}},
      {"platforms", {{"edge", c.edge_platform}, {"cloud", c.cloud_platform}}},
      {"channel", c.channel},
  };
}

std::string config_digest(const ScenarioConfig& config) {
  const std::string canonical = config_to_json(config).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidValue, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

void apply_seed_override(ScenarioConfig& config) {
  const char* env = std::getenv("ECOSENSE_SEED");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || std::string(env).find('-') != std::string::npos) {
    throw Error(ErrorCode::ValidationError, "ECOSENSE_SEED must be an unsigned integer", "seed");
  }
  config.seed = v;
}

}  // namespace ecosense::harness
