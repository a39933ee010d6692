#pragma once

// JSON schema for the domain value types. Field names match the accessor
// names; decoding re-runs every constructor invariant.
//
//   BoundingBox     {"x_min","y_min","x_max","y_max"}
//   Proposal        {"box", "objectness", "true_class", "crop_bytes"}
//   Frame           {"frame_id", "width", "height", "bytes", "objects": [Proposal]}
//   ClassCatalog    {"names": [string]}
//   PlatformProfile {"name", "latency_ms", "power_w", "role": "edge"|"cloud"}
//   ChannelProfile  {"bytes_per_second", "joules_per_byte", "result_metadata_bytes"}

#include <json.hpp>

#include "ecosense/domain/types.hpp"

namespace nlohmann {

template <>
struct adl_serializer<ecosense::BoundingBox> {
  static ecosense::BoundingBox from_json(const json& j);
  static void to_json(json& j, const ecosense::BoundingBox& v);
};

template <>
struct adl_serializer<ecosense::Proposal> {
  static ecosense::Proposal from_json(const json& j);
  static void to_json(json& j, const ecosense::Proposal& v);
};

template <>
struct adl_serializer<ecosense::Frame> {
  static ecosense::Frame from_json(const json& j);
  static void to_json(json& j, const ecosense::Frame& v);
};

template <>
struct adl_serializer<ecosense::ClassCatalog> {
  static ecosense::ClassCatalog from_json(const json& j);
  static void to_json(json& j, const ecosense::ClassCatalog& v);
};

template <>
struct adl_serializer<ecosense::PlatformProfile> {
  static ecosense::PlatformProfile from_json(const json& j);
  static void to_json(json& j, const ecosense::PlatformProfile& v);
};

template <>
struct adl_serializer<ecosense::ChannelProfile> {
  static ecosense::ChannelProfile from_json(const json& j);
  static void to_json(json& j, const ecosense::ChannelProfile& v);
};

}  // namespace nlohmann
