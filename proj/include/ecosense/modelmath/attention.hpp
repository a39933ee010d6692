#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ecosense/modelmath/tensor.hpp"

namespace ecosense::modelmath {

// Squeeze: mean of each channel over H x W.
std::vector<double> global_avg_pool(const Tensor3& x);

struct CoordinatePooling {
  std::vector<double> height;  // mean over C x W, one entry per row
  std::vector<double> width;   // mean over C x H, one entry per column
};

CoordinatePooling coordinate_pool(const Tensor3& x);

enum class HiddenActivation { Relu, Identity };

// Hidden width for a squeeze/excitation bottleneck: max(1, length / reduction).
std::size_t excitation_hidden_width(std::size_t length, std::size_t reduction);

// Excitation: sigmoid(second(act(first(v)))). The output has the length of
// `v`; every entry lies in (0,1).
std::vector<double> excite(std::span<const double> v, const DenseLayer& first,
                           const DenseLayer& second,
                           HiddenActivation hidden = HiddenActivation::Relu);

// Excited 1D descriptors along the three tensor axes.
struct AttentionDescriptors {
  std::vector<double> channel;
  std::vector<double> height;
  std::vector<double> width;
};

/// Combines the three descriptors into a weight tensor of shape (C,H,W) that
/// sums to one: w[c,h,w] is proportional to channel[c] * height[h] * width[w].
///
/// Each descriptor is first divided by its own maximum. This leaves the
/// normalized result unchanged and makes constant descriptors produce
/// exactly 1 / (C*H*W). Throws ShapeMismatch on length mismatch and
/// DegenerateNormalizer when a descriptor is negative or all zero.
Tensor3 attention_normalize(const AttentionDescriptors& d, std::size_t channels,
                            std::size_t height, std::size_t width);

// Element-wise product; throws ShapeMismatch unless shapes agree.
Tensor3 apply_attention(const Tensor3& x, const Tensor3& w_hat);

}  // namespace ecosense::modelmath
