#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecosense {

using Bytes = std::uint64_t;
using ClassIndex = std::size_t;

// Axis-aligned box in frame pixel coordinates, corner representation.
class BoundingBox {
 public:
  BoundingBox(double x_min, double y_min, double x_max, double y_max);

  double x_min() const noexcept { return x_min_; }
  double y_min() const noexcept { return y_min_; }
  double x_max() const noexcept { return x_max_; }
  double y_max() const noexcept { return y_max_; }
  double width() const noexcept { return x_max_ - x_min_; }
  double height() const noexcept { return y_max_ - y_min_; }
  double area() const noexcept { return width() * height(); }

  bool operator==(const BoundingBox&) const = default;

 private:
  double x_min_, y_min_, x_max_, y_max_;
};

inline constexpr double kDefaultBytesPerPixel = 3.0;

// ceil(area * bytes_per_pixel), never less than one byte.
Bytes crop_bytes_for(const BoundingBox& box, double bytes_per_pixel);

class Proposal {
 public:
  Proposal(BoundingBox box, double objectness, ClassIndex true_class, Bytes crop_bytes);

  static Proposal from_box(BoundingBox box, double objectness, ClassIndex true_class,
                           double bytes_per_pixel = kDefaultBytesPerPixel);

  const BoundingBox& box() const noexcept { return box_; }
  double objectness() const noexcept { return objectness_; }
  ClassIndex true_class() const noexcept { return true_class_; }
  Bytes crop_bytes() const noexcept { return crop_bytes_; }

  bool operator==(const Proposal&) const = default;

 private:
  BoundingBox box_;
  double objectness_;
  ClassIndex true_class_;
  Bytes crop_bytes_;
};

// A captured frame: sizes and ground-truth annotations, never pixels.
class Frame {
 public:
  Frame(std::uint64_t frame_id, double width, double height, Bytes bytes,
        std::vector<Proposal> objects);

  std::uint64_t frame_id() const noexcept { return frame_id_; }
  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  Bytes bytes() const noexcept { return bytes_; }
  const std::vector<Proposal>& objects() const noexcept { return objects_; }

  bool operator==(const Frame&) const = default;

 private:
  std::uint64_t frame_id_;
  double width_, height_;
  Bytes bytes_;
  std::vector<Proposal> objects_;
};

class ClassCatalog {
 public:
  explicit ClassCatalog(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }

  bool operator==(const ClassCatalog&) const = default;

  // Built-in presets: "seaships" (6 classes) and "smd-plus" (7 classes).
  static ClassCatalog seaships();
  static ClassCatalog smd_plus();
  static ClassCatalog preset(std::string_view name);

 private:
  std::vector<std::string> names_;
};

enum class PlatformRole { Edge, Cloud };

std::string_view to_string(PlatformRole role) noexcept;
PlatformRole platform_role_from_string(std::string_view text);

class PlatformProfile {
 public:
  PlatformProfile(std::string name, double latency_ms, double power_w, PlatformRole role);

  const std::string& name() const noexcept { return name_; }
  double latency_ms() const noexcept { return latency_ms_; }
  double power_w() const noexcept { return power_w_; }
  PlatformRole role() const noexcept { return role_; }
  // Energy of one inference in joules.
  double joules_per_inference() const noexcept { return power_w_ * latency_ms_ / 1000.0; }

  bool operator==(const PlatformProfile&) const = default;

 private:
  std::string name_;
  double latency_ms_;
  double power_w_;
  PlatformRole role_;
};

class ChannelProfile {
 public:
  ChannelProfile(double bytes_per_second, double joules_per_byte, Bytes result_metadata_bytes);

  double bytes_per_second() const noexcept { return bytes_per_second_; }
  double joules_per_byte() const noexcept { return joules_per_byte_; }
  Bytes result_metadata_bytes() const noexcept { return result_metadata_bytes_; }

  bool operator==(const ChannelProfile&) const = default;

 private:
  double bytes_per_second_;
  double joules_per_byte_;
  Bytes result_metadata_bytes_;
};

// Throws Error(OutOfBoundsBox | BadClassIndex | DegenerateBox) on the first
// violation found.
void validate_frame(const Frame& frame, const ClassCatalog& catalog);

}  // namespace ecosense
