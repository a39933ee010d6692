#include "ecosense/domain/json.hpp"

namespace nlohmann {

using namespace ecosense;

BoundingBox adl_serializer<BoundingBox>::from_json(const json& j) {
  return BoundingBox(j.at("x_min").get<double>(), j.at("y_min").get<double>(),
                     j.at("x_max").get<double>(), j.at("y_max").get<double>());
}

void adl_serializer<BoundingBox>::to_json(json& j, const BoundingBox& v) {
  j = json{{"x_min", v.x_min()}, {"y_min", v.y_min()}, {"x_max", v.x_max()}, {"y_max", v.y_max()}};
}

Proposal adl_serializer<Proposal>::from_json(const json& j) {
  return Proposal(j.at("box").get<BoundingBox>(), j.at("objectness").get<double>(),
                  j.at("true_class").get<ClassIndex>(), j.at("crop_bytes").get<Bytes>());
}

void adl_serializer<Proposal>::to_json(json& j, const Proposal& v) {
  j = json{{"box", v.box()},
           {"objectness", v.objectness()},
           {"true_class", v.true_class()},
           {"crop_bytes", v.crop_bytes()}};
}

Frame adl_serializer<Frame>::from_json(const json& j) {
  std::vector<Proposal> objects;
  for (const auto& o : j.at("objects")) objects.push_back(o.get<Proposal>());
  return Frame(j.at("frame_id").get<std::uint64_t>(), j.at("width").get<double>(),
               j.at("height").get<double>(), j.at("bytes").get<Bytes>(), std::move(objects));
}

void adl_serializer<Frame>::to_json(json& j, const Frame& v) {
  j = json{{"frame_id", v.frame_id()},
           {"width", v.width()},
           {"height", v.height()},
           {"bytes", v.bytes()},
           {"objects", v.objects()}};
}

ClassCatalog adl_serializer<ClassCatalog>::from_json(const json& j) {
  return ClassCatalog(j.at("names").get<std::vector<std::string>>());
}

void adl_serializer<ClassCatalog>::to_json(json& j, const ClassCatalog& v) {
  j = json{{"names", v.names()}};
}

PlatformProfile adl_serializer<PlatformProfile>::from_json(const json& j) {
  return PlatformProfile(j.at("name").get<std::string>(), j.at("latency_ms").get<double>(),
                         j.at("power_w").get<double>(),
                         platform_role_from_string(j.at("role").get<std::string>()));
}

void adl_serializer<PlatformProfile>::to_json(json& j, const PlatformProfile& v) {
  j = json{{"name", v.name()},
           {"latency_ms", v.latency_ms()},
           {"power_w", v.power_w()},
           {"role", std::string(to_string(v.role()))}};
}

ChannelProfile adl_serializer<ChannelProfile>::from_json(const json& j) {
  return ChannelProfile(j.at("bytes_per_second").get<double>(),
                        j.at("joules_per_byte").get<double>(),
                        j.at("result_metadata_bytes").get<Bytes>());
}

void adl_serializer<ChannelProfile>::to_json(json& j, const ChannelProfile& v) {
  j = json{{"bytes_per_second", v.bytes_per_second()},
           {"joules_per_byte", v.joules_per_byte()},
           {"result_metadata_bytes", v.result_metadata_bytes()}};
}

}  // namespace nlohmann
