#include "ecosense/modelmath/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecosense/error.hpp"

namespace ecosense::modelmath {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidValue, std::string(what) + " holds a non-finite value");
  }
}

}  // namespace

Tensor3::Tensor3(std::size_t channels, std::size_t height, std::size_t width,
                 std::vector<double> data)
    : channels_(channels), height_(height), width_(width), data_(std::move(data)) {
  if (channels == 0 || height == 0 || width == 0) {
    throw Error(ErrorCode::ShapeMismatch, "tensor dimensions must be nonzero");
  }
  if (data_.size() != channels * height * width) {
    throw Error(ErrorCode::ShapeMismatch, "tensor data length " + std::to_string(data_.size()) +
                                              " != C*H*W");
  }
  require_finite(data_, "tensor");
}

Tensor3 Tensor3::filled(std::size_t channels, std::size_t height, std::size_t width, double value) {
  return Tensor3(channels, height, width, std::vector<double>(channels * height * width, value));
}

DenseLayer DenseLayer::zeros(std::size_t out, std::size_t in) {
  return DenseLayer{out, in, std::vector<double>(out * in, 0.0), std::vector<double>(out, 0.0)};
}

DenseLayer DenseLayer::identity(std::size_t n) {
  auto layer = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) layer.weights[i * n + i] = 1.0;
  return layer;
}

void DenseLayer::check_shape() const {
  if (out == 0 || in == 0 || weights.size() != out * in || bias.size() != out) {
    throw Error(ErrorCode::ShapeMismatch, "dense layer weights/bias do not match out x in");
  }
}

std::vector<double> DenseLayer::apply(std::span<const double> x) const {
  check_shape();
  if (x.size() != in) {
    throw Error(ErrorCode::ShapeMismatch, "dense layer expects input of length " +
                                              std::to_string(in) + ", got " + std::to_string(x.size()));
  }
  std::vector<double> y(bias);
  for (std::size_t o = 0; o < out; ++o) {
    const double* row = weights.data() + o * in;
    for (std::size_t i = 0; i < in; ++i) y[o] += row[i] * x[i];
  }
  return y;
}

EmbeddingMap::EmbeddingMap(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 2 || cols < 1) throw Error(ErrorCode::ShapeMismatch, "embedding map needs rows >= 2, cols >= 1");
  if (data_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "embedding data length != rows*cols");
  require_finite(data_, "embedding map");
}

std::vector<double> EmbeddingMap::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

ScoreMap::ScoreMap(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 2 || cols < 1 || data_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "score map shape mismatch");
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double v = at(r, c);
      if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::InvalidValue, "score outside [0,1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidValue, "score column " + std::to_string(c) + " does not sum to 1");
    }
  }
}

std::vector<double> ScoreMap::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<double> ScoreMap::column_confidence() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) out[c] = std::max(out[c], at(r, c));
  }
  return out;
}

}  // namespace ecosense::modelmath
