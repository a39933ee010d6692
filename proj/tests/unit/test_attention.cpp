#include <gtest/gtest.h>

#include <random>

#include "ecosense/error.hpp"
#include "ecosense/modelmath/attention.hpp"
#include "test_support.hpp"

namespace ecosense::modelmath {
namespace {

Tensor3 random_tensor(std::mt19937_64& gen, std::size_t c, std::size_t h, std::size_t w) {
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::vector<double> data(c * h * w);
  for (auto& v : data) v = d(gen);
  return Tensor3(c, h, w, data);
}

std::vector<double> random_positive(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> d(0.01, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

DenseLayer layer_from(const nlohmann::json& j) {
  return {j.at("out").get<std::size_t>(), j.at("in").get<std::size_t>(), j.at("weights").get<std::vector<double>>(),
          j.at("bias").get<std::vector<double>>()};
}

TEST(Tensor3, RejectsBadShapesAndNonFinite) {
  EXPECT_THROW(Tensor3(2, 2, 2, std::vector<double>(7)), Error);
  EXPECT_THROW(Tensor3(0, 2, 2, {}), Error);
  EXPECT_THROW(Tensor3(1, 1, 1, {std::nan("")}), Error);
}

TEST(GlobalAvgPool, Cases) {
  EXPECT_EQ(global_avg_pool(Tensor3::filled(3, 2, 4, 1.5)), std::vector<double>(3, 1.5));
  EXPECT_EQ(global_avg_pool(Tensor3(1, 1, 2, {2, 4})), std::vector<double>{3.0});
}

TEST(GlobalAvgPool, MatchesLoopOracle) {
  std::mt19937_64 gen(3);
  const auto x = random_tensor(gen, 3, 4, 5);
  const auto got = global_avg_pool(x);
  for (std::size_t c = 0; c < 3; ++c) {
    testing::HP s = 0;
    for (std::size_t h = 0; h < 4; ++h)
      for (std::size_t w = 0; w < 5; ++w) s += x(c, h, w);
    EXPECT_NEAR(got[c], static_cast<double>(s / 20), 1e-12);
  }
}

TEST(CoordinatePool, HandExampleAndLinearity) {
  const auto p = coordinate_pool(Tensor3(1, 2, 2, {1, 2, 3, 4}));
  EXPECT_EQ(p.height, (std::vector<double>{1.5, 3.5}));
  EXPECT_EQ(p.width, (std::vector<double>{2.0, 3.0}));

  const auto q = coordinate_pool(Tensor3::filled(2, 3, 4, -0.5));
  EXPECT_EQ(q.height, std::vector<double>(3, -0.5));
  EXPECT_EQ(q.width, std::vector<double>(4, -0.5));

  std::mt19937_64 gen(4);
  const auto x = random_tensor(gen, 3, 5, 7);
  const auto r = coordinate_pool(x);
  double mean = 0.0;
  for (double v : x.data()) mean += v;
  mean /= static_cast<double>(x.size());
  double mh = 0.0, mw = 0.0;
  for (double v : r.height) mh += v;
  for (double v : r.width) mw += v;
  EXPECT_NEAR(mh / 5.0, mean, 1e-12);
  EXPECT_NEAR(mw / 7.0, mean, 1e-12);
}

TEST(Excite, DegenerateLayersGiveHalf) {
  const std::vector<double> v{0.3, -1.0, 2.0, 4.0};
  const auto z = excite(v, DenseLayer::zeros(2, 4), DenseLayer::zeros(4, 2));
  EXPECT_EQ(z, std::vector<double>(4, 0.5));
  const std::vector<double> zero(4, 0.0);
  EXPECT_EQ(excite(zero, DenseLayer::identity(4), DenseLayer::identity(4)), std::vector<double>(4, 0.5));
}

TEST(Excite, ShapeMismatchThrows) {
  const std::vector<double> v(4, 1.0);
  EXPECT_THROW(excite(v, DenseLayer::zeros(2, 3), DenseLayer::zeros(4, 2)), Error);
  EXPECT_THROW(excite(v, DenseLayer::zeros(2, 4), DenseLayer::zeros(3, 2)), Error);
  EXPECT_EQ(excitation_hidden_width(64, 16), 4u);
  EXPECT_EQ(excitation_hidden_width(3, 16), 1u);
}

TEST(Excite, MatchesFrozenReference) {
  const auto f = testing::load_fixture("tensors.json").at("excite_6_3");
  const auto input = f.at("input").get<std::vector<double>>();
  const auto got = excite(input, layer_from(f.at("first")), layer_from(f.at("second")));
  const auto want = f.at("expected").get<std::vector<double>>();
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i], want[i], 1e-9);
    EXPECT_GT(got[i], 0.0);
    EXPECT_LT(got[i], 1.0);
  }
}

TEST(AttentionNormalize, UniformDescriptorsGiveExactReciprocal) {
  for (auto [c, h, w] : {std::tuple{2u, 3u, 4u}, std::tuple{8u, 5u, 7u}, std::tuple{1u, 1u, 1u}}) {
    const AttentionDescriptors d{std::vector<double>(c, 0.73), std::vector<double>(h, 0.73),
                                 std::vector<double>(w, 0.73)};
    const auto out = attention_normalize(d, c, h, w);
    const double expected = 1.0 / static_cast<double>(c * h * w);
    for (double v : out.data()) EXPECT_EQ(v, expected);
  }
}

TEST(AttentionNormalize, SumsToOneAndMatchesOuterProductOracle) {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = dim(gen), h = dim(gen), w = dim(gen);
    const AttentionDescriptors d{random_positive(gen, c), random_positive(gen, h), random_positive(gen, w)};
    const auto out = attention_normalize(d, c, h, w);
    testing::HP total = 0;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < h; ++j)
        for (std::size_t k = 0; k < w; ++k) total += testing::HP(d.channel[i]) * d.height[j] * d.width[k];
    double sum = 0.0;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < h; ++j)
        for (std::size_t k = 0; k < w; ++k) {
          const auto ref = testing::HP(d.channel[i]) * d.height[j] * d.width[k] / total;
          EXPECT_NEAR(out(i, j, k), static_cast<double>(ref), 1e-12);
          sum += out(i, j, k);
        }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(AttentionNormalize, InvariantUnderScalingOneDescriptor) {
  std::mt19937_64 gen(7);
  AttentionDescriptors d{random_positive(gen, 4), random_positive(gen, 3), random_positive(gen, 5)};
  const auto base = attention_normalize(d, 4, 3, 5);
  for (auto& v : d.height) v *= 17.0;
  const auto scaled = attention_normalize(d, 4, 3, 5);
  for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(base.data()[i], scaled.data()[i], 1e-15);
}

TEST(AttentionNormalize, Errors) {
  const AttentionDescriptors zeros{{0.0, 0.0}, {1.0}, {1.0}};
  try {
    attention_normalize(zeros, 2, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateNormalizer);
  }
  const AttentionDescriptors negative{{1.0, -0.5}, {1.0}, {1.0}};
  EXPECT_THROW(attention_normalize(negative, 2, 1, 1), Error);
  const AttentionDescriptors wrong{{1.0}, {1.0}, {1.0}};
  try {
    attention_normalize(wrong, 2, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(ApplyAttention, ElementwiseProduct) {
  std::mt19937_64 gen(8);
  const auto x = random_tensor(gen, 2, 3, 4);
  EXPECT_EQ(apply_attention(x, Tensor3::filled(2, 3, 4, 1.0)).data()[5], x.data()[5]);
  const auto zero = apply_attention(Tensor3::filled(2, 3, 4, 0.0), x);
  for (double v : zero.data()) EXPECT_EQ(v, 0.0);
  const auto w = random_tensor(gen, 2, 3, 4);
  const auto out = apply_attention(x, w);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(out.data()[i], x.data()[i] * w.data()[i], 1e-12);
  EXPECT_THROW(apply_attention(x, Tensor3::filled(2, 4, 3, 1.0)), Error);
}

}  // namespace
}  // namespace ecosense::modelmath
