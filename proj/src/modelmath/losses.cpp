#include "ecosense/modelmath/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecosense/error.hpp"

namespace ecosense::modelmath {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": length mismatch");
}

double log_sum_exp(std::span<const double> x) {
  const double peak = *std::max_element(x.begin(), x.end());
  double sum = 0.0;
  for (double v : x) sum += std::exp(v - peak);
  return peak + std::log(sum);
}

std::vector<double> scaled(std::span<const double> x, double t) {
  std::vector<double> out(x.begin(), x.end());
  for (auto& v : out) v /= t;
  return out;
}

}  // namespace

std::vector<double> softmax(std::span<const double> logits) {
  if (logits.empty()) return {};
  const double peak = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - peak);
    sum += out[i];
  }
  for (auto& v : out) v /= sum;
  return out;
}

std::vector<double> log_softmax(std::span<const double> logits) {
  if (logits.empty()) return {};
  const double lse = log_sum_exp(logits);
  std::vector<double> out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - lse;
  return out;
}

EmbeddingMap embedding_map(const Tensor3& h, const DenseLayer& fc) {
  fc.check_shape();
  if (fc.in != h.channels()) throw Error(ErrorCode::ShapeMismatch, "fc input width != feature channels");
  const std::size_t positions = h.height() * h.width();
  std::vector<double> out(fc.out * positions);
  const auto data = h.data();
  for (std::size_t r = 0; r < fc.out; ++r) {
    for (std::size_t p = 0; p < positions; ++p) {
      double acc = fc.bias[r];
      for (std::size_t c = 0; c < fc.in; ++c) acc += fc.weights[r * fc.in + c] * data[c * positions + p];
      out[r * positions + p] = acc;
    }
  }
  return EmbeddingMap(fc.out, positions, std::move(out));
}

ScoreMap score_map(const EmbeddingMap& y) {
  std::vector<double> out(y.rows() * y.cols());
  for (std::size_t c = 0; c < y.cols(); ++c) {
    const auto p = softmax(y.column(c));
    for (std::size_t r = 0; r < y.rows(); ++r) out[r * y.cols() + c] = p[r];
  }
  return ScoreMap(y.rows(), y.cols(), std::move(out));
}

EmbeddingPartition topk_partition(std::span<const double> column_scores,
                                  const EmbeddingMap& embeddings, std::size_t k) {
  const std::size_t n = embeddings.cols();
  require_same_length(column_scores.size(), n, "topk_partition");
  if (k == 0) throw Error(ErrorCode::InvalidValue, "k must be >= 1");
  if (k > n) {
    throw Error(ErrorCode::KTooLarge, "k=" + std::to_string(k) + " exceeds " + std::to_string(n) + " columns");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return column_scores[l] > column_scores[r]; });

  std::vector<bool> chosen(n, false);
  for (std::size_t i = 0; i < k; ++i) chosen[order[i]] = true;

  EmbeddingPartition part;
  part.k = k;
  for (std::size_t c = 0; c < n; ++c) {
    if (chosen[c]) {
      part.selected_columns.push_back(c);
      part.selected.push_back(embeddings.column(c));
    } else {
      part.dropped_columns.push_back(c);
      part.dropped.push_back(embeddings.column(c));
    }
  }
  return part;
}

EmbeddingPartition topk_partition(const ScoreMap& scores, const EmbeddingMap& embeddings,
                                  std::size_t k) {
  if (scores.rows() != embeddings.rows() || scores.cols() != embeddings.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "score map and embedding map shapes differ");
  }
  return topk_partition(scores.column_confidence(), embeddings, k);
}

EmbeddingMap vertex_embedding(std::span<const EmbeddingPartition> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    for (const auto& col : b.selected) {
      if (rows == 0) rows = col.size();
      require_same_length(col.size(), rows, "vertex_embedding");
      ++cols;
    }
  }
  std::vector<double> data(rows * cols);
  std::size_t j = 0;
  for (const auto& b : blocks) {
    for (const auto& col : b.selected) {
      for (std::size_t r = 0; r < rows; ++r) data[r * cols + j] = col[r];
      ++j;
    }
  }
  return EmbeddingMap(rows, cols, std::move(data));
}

std::vector<double> dropped_embedding(std::span<const EmbeddingPartition> blocks) {
  std::vector<double> out;
  for (const auto& b : blocks)
    for (const auto& col : b.dropped) out.insert(out.end(), col.begin(), col.end());
  return out;
}

double cross_entropy_loss(std::span<const double> y_true, std::span<const double> p) {
  require_same_length(y_true.size(), p.size(), "cross_entropy_loss");
  if (p.empty()) throw Error(ErrorCode::NotAProbabilityVector, "empty probability vector");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::NotAProbabilityVector, "probabilities must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw Error(ErrorCode::NotAProbabilityVector, "probabilities sum to " + std::to_string(sum));
  }
  double loss = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (y_true[i] != 0.0) loss -= y_true[i] * std::log(std::max(p[i], kLogEpsilon));
  }
  return loss + 0.0;  // normalizes -0.0
}

double suppression_loss(std::span<const double> y_dropped, Reduction reduction) {
  if (y_dropped.empty()) return 0.0;
  double loss = 0.0;
  for (double y : y_dropped) {
    const double d = std::tanh(y) + 1.0;
    loss += d * d;
  }
  return reduction == Reduction::Mean ? loss / static_cast<double>(y_dropped.size()) : loss;
}

void BsHyperParams::validate() const {
  if (!(lambda_e >= 0.0) || !(lambda_d >= 0.0) || !std::isfinite(lambda_e) || !std::isfinite(lambda_d)) {
    throw Error(ErrorCode::InvalidValue, "lambda_e and lambda_d must be finite and >= 0");
  }
}

double bs_loss(double loss_e, double loss_d, const BsHyperParams& hp) {
  hp.validate();
  return hp.lambda_e * loss_e + hp.lambda_d * loss_d;
}

double refinement_loss(std::span<const double> y1, std::span<const double> y2, double temperature) {
  require_same_length(y1.size(), y2.size(), "refinement_loss");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw Error(ErrorCode::InvalidValue, "temperature must be > 0");
  }
  if (y1.empty()) return 0.0;
  const auto lp = log_softmax(scaled(y1, temperature));
  const auto lq = log_softmax(scaled(y2, temperature));
  double loss = 0.0;
  for (std::size_t i = 0; i < lq.size(); ++i) loss += std::exp(lq[i]) * (lq[i] - lp[i]);
  // KL divergence is nonnegative; clip rounding noise around zero.
  return std::max(loss, 0.0);
}

double backend_total_loss(double loss_bs, double loss_r) { return loss_bs + loss_r; }

void LocalizerLossParts::validate() const {
  if (!std::isfinite(l_obj) || !std::isfinite(l_reg) || l_obj < 0.0 || l_reg < 0.0) {
    throw Error(ErrorCode::InvalidValue, "localizer loss parts must be finite and >= 0");
  }
}

double localizer_loss(const LocalizerLossParts& parts) {
  parts.validate();
  return parts.l_obj + parts.l_reg;
}

double binary_cross_entropy(std::span<const double> targets, std::span<const double> probs) {
  require_same_length(targets.size(), probs.size(), "binary_cross_entropy");
  if (targets.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double p = std::clamp(probs[i], kLogEpsilon, 1.0 - kLogEpsilon);
    sum -= targets[i] * std::log(p) + (1.0 - targets[i]) * std::log(1.0 - p);
  }
  return sum / static_cast<double>(targets.size());
}

double smooth_l1(std::span<const double> predicted, std::span<const double> target, double beta) {
  require_same_length(predicted.size(), target.size(), "smooth_l1");
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidValue, "beta must be > 0");
  if (predicted.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double d = std::abs(predicted[i] - target[i]);
    sum += d < beta ? 0.5 * d * d / beta : d - 0.5 * beta;
  }
  return sum / static_cast<double>(predicted.size());
}

}  // namespace ecosense::modelmath
