#include "ecosense/modelmath/attention.hpp"

#include <algorithm>
#include <cmath>

#include "ecosense/error.hpp"

namespace ecosense::modelmath {

std::vector<double> global_avg_pool(const Tensor3& x) {
  const double n = static_cast<double>(x.height() * x.width());
  std::vector<double> out(x.channels(), 0.0);
  for (std::size_t c = 0; c < x.channels(); ++c) {
    double sum = 0.0;
    for (std::size_t h = 0; h < x.height(); ++h)
      for (std::size_t w = 0; w < x.width(); ++w) sum += x(c, h, w);
    out[c] = sum / n;
  }
  return out;
}

CoordinatePooling coordinate_pool(const Tensor3& x) {
  CoordinatePooling out{std::vector<double>(x.height(), 0.0), std::vector<double>(x.width(), 0.0)};
  for (std::size_t c = 0; c < x.channels(); ++c)
    for (std::size_t h = 0; h < x.height(); ++h)
      for (std::size_t w = 0; w < x.width(); ++w) {
        out.height[h] += x(c, h, w);
        out.width[w] += x(c, h, w);
      }
  const double per_row = static_cast<double>(x.channels() * x.width());
  const double per_col = static_cast<double>(x.channels() * x.height());
  for (auto& v : out.height) v /= per_row;
  for (auto& v : out.width) v /= per_col;
  return out;
}

std::size_t excitation_hidden_width(std::size_t length, std::size_t reduction) {
  if (reduction == 0) throw Error(ErrorCode::InvalidValue, "reduction must be >= 1");
  return std::max<std::size_t>(1, length / reduction);
}

std::vector<double> excite(std::span<const double> v, const DenseLayer& first,
                           const DenseLayer& second, HiddenActivation hidden) {
  first.check_shape();
  second.check_shape();
  if (first.in != v.size() || second.in != first.out || second.out != v.size()) {
    throw Error(ErrorCode::ShapeMismatch, "excitation layers do not chain to the input length");
  }
  auto z = first.apply(v);
  if (hidden == HiddenActivation::Relu) {
    for (auto& e : z) e = std::max(e, 0.0);
  }
  auto out = second.apply(z);
  for (auto& e : out) e = 1.0 / (1.0 + std::exp(-e));
  return out;
}

namespace {

std::vector<double> unit_max(const std::vector<double>& d, const char* axis) {
  double peak = 0.0;
  for (double v : d) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::DegenerateNormalizer,
                  std::string(axis) + " descriptor must be finite and nonnegative");
    }
    peak = std::max(peak, v);
  }
  if (peak == 0.0) {
    throw Error(ErrorCode::DegenerateNormalizer, std::string(axis) + " descriptor is all zero");
  }
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] / peak;
  return out;
}

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e;
  return s;
}

}  // namespace

Tensor3 attention_normalize(const AttentionDescriptors& d, std::size_t channels,
                            std::size_t height, std::size_t width) {
  if (d.channel.size() != channels || d.height.size() != height || d.width.size() != width) {
    throw Error(ErrorCode::ShapeMismatch, "descriptor lengths do not match (C,H,W)");
  }
  const auto ch = unit_max(d.channel, "channel");
  const auto hh = unit_max(d.height, "height");
  const auto ww = unit_max(d.width, "width");
  // Sum of an outer product factorizes into the product of the axis sums.
  const double total = sum_of(ch) * sum_of(hh) * sum_of(ww);

  std::vector<double> out;
  out.reserve(channels * height * width);
  for (std::size_t c = 0; c < channels; ++c)
    for (std::size_t h = 0; h < height; ++h)
      for (std::size_t w = 0; w < width; ++w) out.push_back(ch[c] * hh[h] * ww[w] / total);
  return Tensor3(channels, height, width, std::move(out));
}

Tensor3 apply_attention(const Tensor3& x, const Tensor3& w_hat) {
  if (!x.same_shape(w_hat)) throw Error(ErrorCode::ShapeMismatch, "attention weights shape != input shape");
  std::vector<double> out(x.size());
  const auto a = x.data();
  const auto b = w_hat.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return Tensor3(x.channels(), x.height(), x.width(), std::move(out));
}

}  // namespace ecosense::modelmath
