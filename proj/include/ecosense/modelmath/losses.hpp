#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ecosense/modelmath/tensor.hpp"

namespace ecosense::modelmath {

inline constexpr double kLogEpsilon = 1e-12;

// Numerically stable softmax / log-softmax of a logit vector.
std::vector<double> softmax(std::span<const double> logits);
std::vector<double> log_softmax(std::span<const double> logits);

// Per-category embedding map of a feature map: Y = W * h + b, where h is
// reshaped to C_i x (H*W) and `fc` maps C_i -> C_gt.
EmbeddingMap embedding_map(const Tensor3& h, const DenseLayer& fc);

// Softmax over the category axis of every column.
ScoreMap score_map(const EmbeddingMap& y);

struct EmbeddingPartition {
  std::size_t k = 0;
  std::vector<std::size_t> selected_columns;  // ascending column order
  std::vector<std::size_t> dropped_columns;   // ascending column order
  std::vector<std::vector<double>> selected;  // one C_gt column per entry
  std::vector<std::vector<double>> dropped;
};

/// Splits embedding columns into the `k` columns with the highest score and
/// the rest. Equal scores prefer the lower column index. Throws KTooLarge
/// when k exceeds the column count and InvalidValue when k is zero.
EmbeddingPartition topk_partition(std::span<const double> column_scores,
                                  const EmbeddingMap& embeddings, std::size_t k);

// Column score is the column's highest category probability.
EmbeddingPartition topk_partition(const ScoreMap& scores, const EmbeddingMap& embeddings,
                                  std::size_t k);

// Selected columns of every block, concatenated into one C_gt x sum(k) map.
EmbeddingMap vertex_embedding(std::span<const EmbeddingPartition> blocks);

// Flattened values of every dropped column of every block.
std::vector<double> dropped_embedding(std::span<const EmbeddingPartition> blocks);

// -sum y_i log p_i. `p` must be a distribution within 1e-6.
double cross_entropy_loss(std::span<const double> y_true, std::span<const double> p);

enum class Reduction { Sum, Mean };

// sum (tanh(y) + 1)^2 over dropped embedding values (pseudo label -1).
double suppression_loss(std::span<const double> y_dropped, Reduction reduction = Reduction::Sum);

struct BsHyperParams {
  double lambda_e = 1.0;
  double lambda_d = 1.0;

  void validate() const;
};

double bs_loss(double loss_e, double loss_d, const BsHyperParams& hp = {});

// KL(softmax(y2/t) || softmax(y1/t)) computed as sum q (log q - log_softmax(y1/t)).
double refinement_loss(std::span<const double> y1, std::span<const double> y2, double temperature);

double backend_total_loss(double loss_bs, double loss_r);

struct LocalizerLossParts {
  double l_obj = 0.0;
  double l_reg = 0.0;

  void validate() const;
};

double localizer_loss(const LocalizerLossParts& parts);

// Mean binary cross-entropy over objectness targets in {0,1}.
double binary_cross_entropy(std::span<const double> targets, std::span<const double> probs);

// Mean smooth-L1 (Huber with transition `beta`) over regression offsets.
double smooth_l1(std::span<const double> predicted, std::span<const double> target, double beta = 1.0);

}  // namespace ecosense::modelmath
