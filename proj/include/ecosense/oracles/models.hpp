#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "ecosense/domain/types.hpp"
#include "ecosense/oracles/rng.hpp"

namespace ecosense::oracles {

// Row r is the predicted-class distribution for true class r.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::vector<double>> rows);

  static ConfusionMatrix identity(std::size_t classes);
  static ConfusionMatrix uniform(std::size_t classes);

  std::size_t classes() const noexcept { return rows_.size(); }
  const std::vector<double>& row(std::size_t true_class) const { return rows_.at(true_class); }
  double at(std::size_t true_class, std::size_t predicted) const { return rows_.at(true_class).at(predicted); }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::vector<std::vector<double>> rows_;
};

struct DifficultyModel {
  double p_edge_correct_easy = 1.0;
  double p_edge_correct_hard = 0.0;
  double p_hard = 0.0;
  double tpr = 1.0;  // P(flagged hard | hard) at the reference threshold 0.5
  double fpr = 0.0;  // P(flagged hard | easy)

  void validate() const;
  bool operator==(const DifficultyModel&) const = default;
};

struct LocalizerModel {
  double recall = 1.0;
  double duplicate_rate = 0.0;
  double jitter_px = 0.0;
  // Duplicates are shifted from their detection by at most this fraction of
  // the box width/height, which keeps their IoU with it >= (1-f)^2 / (2-(1-f)^2).
  double duplicate_shift_frac = 0.05;

  void validate() const;
  // Lower bound on IoU between a detection and any of its duplicates.
  double min_duplicate_iou() const noexcept;
  bool operator==(const LocalizerModel&) const = default;
};

struct DifficultyDraw {
  bool is_hard = false;
  bool edge_would_be_correct = false;
};

// Draws two uniforms: hardness, then edge correctness.
DifficultyDraw assign_difficulty(const Proposal& proposal, const DifficultyModel& m, SeededRng& rng);

/// Estimated difficulty in [0,1). Draws four uniforms.
///
/// The sample is flagged with probability tpr (hard) or fpr (easy). A flagged
/// sample scores 0.5 + 0.5*B, an unflagged one 0.5*B, with B ~ Beta(2,2)
/// drawn as the median of three uniforms. Thresholding at 0.5 therefore
/// reproduces tpr/fpr exactly, and other thresholds act smoothly.
double estimate_difficulty(bool is_hard, const DifficultyModel& m, SeededRng& rng);

// CDF of Beta(2,2): 3x^2 - 2x^3 on [0,1].
double beta22_cdf(double x) noexcept;

// P(score >= tau) given the flag outcome of estimate_difficulty.
double route_probability_given_flag(double tau, bool flagged) noexcept;

// P(score >= tau) for a hard or easy sample under model m.
double route_probability(const DifficultyModel& m, double tau, bool is_hard) noexcept;

// Samples the predicted class from row `true_class`. Draws one uniform.
ClassIndex classify(ClassIndex true_class, const ConfusionMatrix& cm, SeededRng& rng);

/// Edge prediction honoring a pre-drawn correctness flag. Draws one uniform.
/// A correct prediction is the true class; an incorrect one is sampled from
/// the off-diagonal part of the row (uniform over other classes when the row
/// has no off-diagonal mass).
ClassIndex classify_conditioned(ClassIndex true_class, bool correct, const ConfusionMatrix& cm,
                                SeededRng& rng);

/// Stochastic localizer. Objects are visited in frame order; each is detected
/// with probability `recall`, translated by an integer jitter of at most
/// jitter_px (kept inside the frame), given objectness in [0.5,1), and
/// followed by Poisson(duplicate_rate) shifted duplicates of lower objectness.
std::vector<Proposal> localize(const Frame& frame, const LocalizerModel& m, SeededRng& rng,
                               double bytes_per_pixel = kDefaultBytesPerPixel);

}  // namespace ecosense::oracles

namespace nlohmann {

template <>
struct adl_serializer<ecosense::oracles::ConfusionMatrix> {
  static ecosense::oracles::ConfusionMatrix from_json(const json& j);
  static void to_json(json& j, const ecosense::oracles::ConfusionMatrix& v);
};

template <>
struct adl_serializer<ecosense::oracles::DifficultyModel> {
  static ecosense::oracles::DifficultyModel from_json(const json& j);
  static void to_json(json& j, const ecosense::oracles::DifficultyModel& v);
};

template <>
struct adl_serializer<ecosense::oracles::LocalizerModel> {
  static ecosense::oracles::LocalizerModel from_json(const json& j);
  static void to_json(json& j, const ecosense::oracles::LocalizerModel& v);
};

}  // namespace nlohmann
