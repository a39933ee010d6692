#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ecosense::modelmath {

// Dense C x H x W array, row-major (w fastest).
class Tensor3 {
 public:
  Tensor3(std::size_t channels, std::size_t height, std::size_t width, std::vector<double> data);

  static Tensor3 filled(std::size_t channels, std::size_t height, std::size_t width, double value);

  std::size_t channels() const noexcept { return channels_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool same_shape(const Tensor3& other) const noexcept {
    return channels_ == other.channels_ && height_ == other.height_ && width_ == other.width_;
  }

  double operator()(std::size_t c, std::size_t h, std::size_t w) const noexcept {
    return data_[(c * height_ + h) * width_ + w];
  }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t channels_, height_, width_;
  std::vector<double> data_;
};

// Fully connected layer y = W x + b with W stored out x in, row-major.
struct DenseLayer {
  std::size_t out = 0;
  std::size_t in = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  static DenseLayer zeros(std::size_t out, std::size_t in);
  static DenseLayer identity(std::size_t n);

  void check_shape() const;  // throws ShapeMismatch
  std::vector<double> apply(std::span<const double> x) const;
};

// Per-category embeddings: rows = categories, cols = spatial positions.
class EmbeddingMap {
 public:
  EmbeddingMap(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::vector<double> column(std::size_t c) const;
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

// Column-wise probabilities over categories; same shape as its EmbeddingMap.
class ScoreMap {
 public:
  // Throws InvalidValue unless every column is a distribution within 1e-9.
  ScoreMap(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::vector<double> column(std::size_t c) const;
  // Max category probability of each column.
  std::vector<double> column_confidence() const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

}  // namespace ecosense::modelmath
