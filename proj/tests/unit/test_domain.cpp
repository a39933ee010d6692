#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ecosense/domain/json.hpp"
#include "ecosense/domain/types.hpp"
#include "ecosense/error.hpp"

namespace ecosense {
namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ecosense::Error";
  return ErrorCode::InvalidValue;
}

TEST(BoundingBox, RejectsDegenerateAndNegative) {
  EXPECT_EQ(code_of([] { BoundingBox(5, 0, 5, 10); }), ErrorCode::DegenerateBox);
  EXPECT_EQ(code_of([] { BoundingBox(0, 10, 10, 2); }), ErrorCode::DegenerateBox);
  EXPECT_EQ(code_of([] { BoundingBox(-1, 0, 10, 10); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { BoundingBox(0, 0, std::numeric_limits<double>::infinity(), 10); }),
            ErrorCode::InvalidValue);
  EXPECT_DOUBLE_EQ(BoundingBox(1, 2, 4, 6).area(), 12.0);
}

TEST(Proposal, CropBytesIsCeilOfAreaTimesBpp) {
  EXPECT_EQ(crop_bytes_for(BoundingBox(0, 0, 10, 10), 3.0), 300u);
  EXPECT_EQ(crop_bytes_for(BoundingBox(0, 0, 0.5, 0.5), 3.0), 1u);  // 0.75 -> 1
  EXPECT_EQ(crop_bytes_for(BoundingBox(0, 0, 3, 3), 1.5), 14u);     // 13.5 -> 14
  EXPECT_EQ(crop_bytes_for(BoundingBox(0, 0, 0.01, 0.01), 3.0), 1u);
  EXPECT_EQ(code_of([] { crop_bytes_for(BoundingBox(0, 0, 1, 1), 0.0); }), ErrorCode::InvalidValue);
}

TEST(Proposal, CropBytesMonotoneInArea) {
  Bytes prev = 0;
  for (int side = 1; side < 200; ++side) {
    const Bytes b = crop_bytes_for(BoundingBox(0, 0, side * 0.7, side * 1.3), 3.0);
    EXPECT_GE(b, prev);
    prev = b;
  }
}

TEST(Proposal, ValidatesFields) {
  const BoundingBox box(0, 0, 4, 4);
  EXPECT_EQ(code_of([&] { Proposal(box, 1.5, 0, 10); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([&] { Proposal(box, -0.1, 0, 10); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([&] { Proposal(box, 0.5, 0, 0); }), ErrorCode::InvalidValue);
  const auto p = Proposal::from_box(box, 0.5, 2);
  EXPECT_EQ(p.crop_bytes(), 48u);
  EXPECT_EQ(p.true_class(), 2u);
}

TEST(Frame, RejectsObjectsOutsideFrame) {
  const auto inside = Proposal::from_box(BoundingBox(10, 10, 100, 100), 1.0, 0);
  EXPECT_NO_THROW(Frame(0, 640, 480, 640 * 480 * 3, {inside}));
  const auto outside = Proposal::from_box(BoundingBox(600, 10, 700, 100), 1.0, 0);
  EXPECT_EQ(code_of([&] { Frame(1, 640, 480, 921600, {outside}); }), ErrorCode::OutOfBoundsBox);
  EXPECT_EQ(code_of([&] { Frame(1, 640, 480, 0, {}); }), ErrorCode::InvalidValue);
}

TEST(ValidateFrame, ChecksClassAgainstCatalog) {
  const auto seaships = ClassCatalog::seaships();
  const Frame ok(0, 640, 480, 921600, {Proposal::from_box(BoundingBox(1, 1, 50, 50), 1.0, 5)});
  EXPECT_NO_THROW(validate_frame(ok, seaships));
  const Frame bad(0, 640, 480, 921600, {Proposal::from_box(BoundingBox(1, 1, 50, 50), 1.0, 6)});
  EXPECT_EQ(code_of([&] { validate_frame(bad, seaships); }), ErrorCode::BadClassIndex);
  EXPECT_NO_THROW(validate_frame(bad, ClassCatalog::smd_plus()));
}

TEST(ClassCatalog, PresetsMatchPublishedClassLists) {
  const auto s = ClassCatalog::seaships();
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.names().front(), "bulk cargo carrier");
  EXPECT_EQ(s.names()[1], "container ship");
  const auto m = ClassCatalog::smd_plus();
  ASSERT_EQ(m.size(), 7u);
  EXPECT_EQ(m.names().front(), "ferry");
  EXPECT_EQ(ClassCatalog::preset("smd-plus"), m);
  EXPECT_EQ(code_of([] { ClassCatalog::preset("coco"); }), ErrorCode::UnknownPreset);
}

TEST(ClassCatalog, RejectsTooFewOrDuplicateNames) {
  EXPECT_EQ(code_of([] { ClassCatalog({"only"}); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { ClassCatalog({"a", "b", "a"}); }), ErrorCode::InvalidValue);
}

TEST(PlatformProfile, EnergyPerInference) {
  const PlatformProfile tpu("TPU Dev", 9.0, 3.47, PlatformRole::Edge);
  EXPECT_NEAR(tpu.joules_per_inference(), 0.03123, 1e-12);
  EXPECT_EQ(code_of([] { PlatformProfile("x", 0.0, 1.0, PlatformRole::Edge); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { PlatformProfile("x", 1.0, -1.0, PlatformRole::Cloud); }), ErrorCode::InvalidValue);
  EXPECT_EQ(platform_role_from_string("cloud"), PlatformRole::Cloud);
  EXPECT_EQ(code_of([] { platform_role_from_string("fog"); }), ErrorCode::InvalidValue);
}

TEST(ChannelProfile, AllFieldsPositive) {
  EXPECT_NO_THROW(ChannelProfile(1e6, 1e-7, 64));
  EXPECT_EQ(code_of([] { ChannelProfile(0.0, 1e-7, 64); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { ChannelProfile(1e6, 0.0, 64); }), ErrorCode::InvalidValue);
  EXPECT_EQ(code_of([] { ChannelProfile(1e6, 1e-7, 0); }), ErrorCode::InvalidValue);
}

TEST(DomainJson, RoundTripIsIdentity) {
  const BoundingBox box(1.25, 2.5, 300.75, 200.125);
  EXPECT_EQ(nlohmann::json(box).get<BoundingBox>(), box);

  const auto p = Proposal::from_box(box, 0.875, 3, 2.5);
  EXPECT_EQ(nlohmann::json(p).get<Proposal>(), p);

  const Frame f(42, 640, 480, 921600, {p, Proposal::from_box(BoundingBox(0, 0, 1, 1), 0.1, 0)});
  EXPECT_EQ(nlohmann::json(f).get<Frame>(), f);

  EXPECT_EQ(nlohmann::json(ClassCatalog::smd_plus()).get<ClassCatalog>(), ClassCatalog::smd_plus());

  const PlatformProfile alveo("Alveo U200", 16.8, 17.8, PlatformRole::Cloud);
  EXPECT_EQ(nlohmann::json(alveo).get<PlatformProfile>(), alveo);

  const ChannelProfile ch(12.5e6, 2.8e-8, 64);
  EXPECT_EQ(nlohmann::json(ch).get<ChannelProfile>(), ch);
}

TEST(DomainJson, DecodingRevalidates) {
  const auto doc = nlohmann::json::parse(R"({"x_min": 5, "y_min": 0, "x_max": 1, "y_max": 3})");
  EXPECT_EQ(code_of([&] { doc.get<BoundingBox>(); }), ErrorCode::DegenerateBox);
}

}  // namespace
}  // namespace ecosense
