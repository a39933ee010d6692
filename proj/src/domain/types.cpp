#include "ecosense/domain/types.hpp"

#include <cmath>
#include <set>

#include "ecosense/error.hpp"

namespace ecosense {

namespace {

void require_finite_nonneg(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw Error(ErrorCode::InvalidValue, std::string(what) + " must be finite and >= 0");
  }
}

bool box_inside(const BoundingBox& b, double width, double height) {
  return b.x_max() <= width && b.y_max() <= height;
}

}  // namespace

BoundingBox::BoundingBox(double x_min, double y_min, double x_max, double y_max)
    : x_min_(x_min), y_min_(y_min), x_max_(x_max), y_max_(y_max) {
  require_finite_nonneg(x_min, "x_min");
  require_finite_nonneg(y_min, "y_min");
  require_finite_nonneg(x_max, "x_max");
  require_finite_nonneg(y_max, "y_max");
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw Error(ErrorCode::DegenerateBox, "box must have positive width and height");
  }
}

Bytes crop_bytes_for(const BoundingBox& box, double bytes_per_pixel) {
  if (!std::isfinite(bytes_per_pixel) || bytes_per_pixel <= 0.0) {
    throw Error(ErrorCode::InvalidValue, "bytes_per_pixel must be > 0");
  }
  const double raw = std::ceil(box.area() * bytes_per_pixel);
  return raw < 1.0 ? Bytes{1} : static_cast<Bytes>(raw);
}

Proposal::Proposal(BoundingBox box, double objectness, ClassIndex true_class, Bytes crop_bytes)
    : box_(box), objectness_(objectness), true_class_(true_class), crop_bytes_(crop_bytes) {
  if (!(objectness >= 0.0 && objectness <= 1.0)) {
    throw Error(ErrorCode::InvalidValue, "objectness must lie in [0,1]");
  }
  if (crop_bytes == 0) throw Error(ErrorCode::InvalidValue, "crop_bytes must be > 0");
}

Proposal Proposal::from_box(BoundingBox box, double objectness, ClassIndex true_class,
                            double bytes_per_pixel) {
  return Proposal(box, objectness, true_class, crop_bytes_for(box, bytes_per_pixel));
}

Frame::Frame(std::uint64_t frame_id, double width, double height, Bytes bytes,
             std::vector<Proposal> objects)
    : frame_id_(frame_id), width_(width), height_(height), bytes_(bytes),
      objects_(std::move(objects)) {
  if (!std::isfinite(width) || !std::isfinite(height) || width <= 0.0 || height <= 0.0) {
    throw Error(ErrorCode::InvalidValue, "frame dimensions must be > 0");
  }
  if (bytes == 0) throw Error(ErrorCode::InvalidValue, "frame bytes must be > 0");
  for (const auto& obj : objects_) {
    if (!box_inside(obj.box(), width_, height_)) {
      throw Error(ErrorCode::OutOfBoundsBox, "object exceeds frame " + std::to_string(frame_id));
    }
  }
}

ClassCatalog::ClassCatalog(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw Error(ErrorCode::InvalidValue, "catalog needs >= 2 classes");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw Error(ErrorCode::InvalidValue, "catalog names must be unique");
  }
}

ClassCatalog ClassCatalog::seaships() {
  return ClassCatalog({"bulk cargo carrier", "container ship", "fishing boat",
                       "general cargo ship", "ore carrier", "passenger ship"});
}

ClassCatalog ClassCatalog::smd_plus() {
  return ClassCatalog({"ferry", "buoy", "vessel ship", "boat", "kayak", "sail boat", "others"});
}

ClassCatalog ClassCatalog::preset(std::string_view name) {
  if (name == "seaships") return seaships();
  if (name == "smd-plus") return smd_plus();
  throw Error(ErrorCode::UnknownPreset, "no class catalog named '" + std::string(name) + "'");
}

std::string_view to_string(PlatformRole role) noexcept {
  return role == PlatformRole::Edge ? "edge" : "cloud";
}

PlatformRole platform_role_from_string(std::string_view text) {
  if (text == "edge") return PlatformRole::Edge;
  if (text == "cloud") return PlatformRole::Cloud;
  throw Error(ErrorCode::InvalidValue, "role must be 'edge' or 'cloud'");
}

PlatformProfile::PlatformProfile(std::string name, double latency_ms, double power_w,
                                 PlatformRole role)
    : name_(std::move(name)), latency_ms_(latency_ms), power_w_(power_w), role_(role) {
  if (!(std::isfinite(latency_ms) && latency_ms > 0.0)) {
    throw Error(ErrorCode::InvalidValue, "latency_ms must be > 0");
  }
  if (!(std::isfinite(power_w) && power_w > 0.0)) {
    throw Error(ErrorCode::InvalidValue, "power_w must be > 0");
  }
}

ChannelProfile::ChannelProfile(double bytes_per_second, double joules_per_byte,
                               Bytes result_metadata_bytes)
    : bytes_per_second_(bytes_per_second), joules_per_byte_(joules_per_byte),
      result_metadata_bytes_(result_metadata_bytes) {
  if (!(std::isfinite(bytes_per_second) && bytes_per_second > 0.0)) {
    throw Error(ErrorCode::InvalidValue, "bytes_per_second must be > 0");
  }
  if (!(std::isfinite(joules_per_byte) && joules_per_byte > 0.0)) {
    throw Error(ErrorCode::InvalidValue, "joules_per_byte must be > 0");
  }
  if (result_metadata_bytes == 0) {
    throw Error(ErrorCode::InvalidValue, "result_metadata_bytes must be > 0");
  }
}

void validate_frame(const Frame& frame, const ClassCatalog& catalog) {
  for (std::size_t i = 0; i < frame.objects().size(); ++i) {
    const auto& obj = frame.objects()[i];
    const auto& b = obj.box();
    if (!(b.width() > 0.0) || !(b.height() > 0.0)) {
      throw Error(ErrorCode::DegenerateBox, "object " + std::to_string(i) + " has no extent");
    }
    if (!box_inside(b, frame.width(), frame.height())) {
      throw Error(ErrorCode::OutOfBoundsBox, "object " + std::to_string(i) + " exceeds frame");
    }
    if (obj.true_class() >= catalog.size()) {
      throw Error(ErrorCode::BadClassIndex,
                  "object " + std::to_string(i) + " has class " +
                      std::to_string(obj.true_class()) + " but catalog has " +
                      std::to_string(catalog.size()));
    }
  }
}

}  // namespace ecosense
