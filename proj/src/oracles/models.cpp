#include "ecosense/oracles/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecosense/error.hpp"

namespace ecosense::oracles {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidValue, std::string(name) + " must lie in [0,1]", name);
}

double median3(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

// Shifts `box` by (dx,dy), then slides it back inside [0,width]x[0,height]
// without changing its size.
BoundingBox translate_inside(const BoundingBox& box, double dx, double dy, double width, double height) {
  double x = box.x_min() + dx;
  double y = box.y_min() + dy;
  x = std::clamp(x, 0.0, width - box.width());
  y = std::clamp(y, 0.0, height - box.height());
  return BoundingBox(x, y, x + box.width(), y + box.height());
}

double signed_offset(SeededRng& rng, double scale) {
  return std::round(scale * (2.0 * rng.uniform() - 1.0));
}

}  // namespace

ConfusionMatrix::ConfusionMatrix(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw Error(ErrorCode::InvalidValue, "confusion matrix needs >= 2 classes");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != rows_.size()) {
      throw Error(ErrorCode::ShapeMismatch, "confusion matrix must be square");
    }
    double sum = 0.0;
    for (double v : rows_[r]) {
      if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::InvalidValue, "confusion entry outside [0,1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidValue, "confusion row " + std::to_string(r) + " does not sum to 1");
    }
  }
}

ConfusionMatrix ConfusionMatrix::identity(std::size_t classes) {
  std::vector<std::vector<double>> rows(classes, std::vector<double>(classes, 0.0));
  for (std::size_t i = 0; i < classes; ++i) rows[i][i] = 1.0;
  return ConfusionMatrix(std::move(rows));
}

ConfusionMatrix ConfusionMatrix::uniform(std::size_t classes) {
  return ConfusionMatrix(std::vector<std::vector<double>>(
      classes, std::vector<double>(classes, 1.0 / static_cast<double>(classes))));
}

void DifficultyModel::validate() const {
  require_probability(p_edge_correct_easy, "p_edge_correct_easy");
  require_probability(p_edge_correct_hard, "p_edge_correct_hard");
  require_probability(p_hard, "p_hard");
  require_probability(tpr, "tpr");
  require_probability(fpr, "fpr");
}

void LocalizerModel::validate() const {
  require_probability(recall, "recall");
  if (!(duplicate_rate >= 0.0 && duplicate_rate <= 30.0)) {
    throw Error(ErrorCode::InvalidValue, "duplicate_rate must lie in [0,30]", "duplicate_rate");
  }
  if (!(jitter_px >= 0.0) || !std::isfinite(jitter_px)) {
    throw Error(ErrorCode::InvalidValue, "jitter_px must be >= 0", "jitter_px");
  }
  if (!(duplicate_shift_frac >= 0.0 && duplicate_shift_frac < 1.0)) {
    throw Error(ErrorCode::InvalidValue, "duplicate_shift_frac must lie in [0,1)", "duplicate_shift_frac");
  }
}

double LocalizerModel::min_duplicate_iou() const noexcept {
  const double keep = (1.0 - duplicate_shift_frac) * (1.0 - duplicate_shift_frac);
  return keep / (2.0 - keep);
}

DifficultyDraw assign_difficulty(const Proposal&, const DifficultyModel& m, SeededRng& rng) {
  DifficultyDraw d;
  d.is_hard = rng.bernoulli(m.p_hard);
  d.edge_would_be_correct = rng.bernoulli(d.is_hard ? m.p_edge_correct_hard : m.p_edge_correct_easy);
  return d;
}

double estimate_difficulty(bool is_hard, const DifficultyModel& m, SeededRng& rng) {
  const bool flagged = rng.bernoulli(is_hard ? m.tpr : m.fpr);
  const double a = rng.uniform();
  const double b = rng.uniform();
  const double c = rng.uniform();
  const double shape = median3(a, b, c);
  return flagged ? 0.5 + 0.5 * shape : 0.5 * shape;
}

double beta22_cdf(double x) noexcept {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * (3.0 - 2.0 * x);
}

double route_probability_given_flag(double tau, bool flagged) noexcept {
  return flagged ? 1.0 - beta22_cdf(2.0 * tau - 1.0) : 1.0 - beta22_cdf(2.0 * tau);
}

double route_probability(const DifficultyModel& m, double tau, bool is_hard) noexcept {
  const double p_flag = is_hard ? m.tpr : m.fpr;
  return p_flag * route_probability_given_flag(tau, true) +
         (1.0 - p_flag) * route_probability_given_flag(tau, false);
}

ClassIndex classify(ClassIndex true_class, const ConfusionMatrix& cm, SeededRng& rng) {
  if (true_class >= cm.classes()) {
    throw Error(ErrorCode::BadClassIndex, "class " + std::to_string(true_class) + " outside confusion matrix");
  }
  return rng.categorical(cm.row(true_class));
}

ClassIndex classify_conditioned(ClassIndex true_class, bool correct, const ConfusionMatrix& cm,
                                SeededRng& rng) {
  if (true_class >= cm.classes()) {
    throw Error(ErrorCode::BadClassIndex, "class " + std::to_string(true_class) + " outside confusion matrix");
  }
  std::vector<double> off(cm.row(true_class));
  off[true_class] = 0.0;
  double mass = 0.0;
  for (double v : off) mass += v;
  if (mass == 0.0) {
    std::fill(off.begin(), off.end(), 1.0);
    off[true_class] = 0.0;
  }
  const ClassIndex wrong = rng.categorical(off);
  return correct ? true_class : wrong;
}

std::vector<Proposal> localize(const Frame& frame, const LocalizerModel& m, SeededRng& rng,
                               double bytes_per_pixel) {
  std::vector<Proposal> out;
  for (const auto& obj : frame.objects()) {
    if (!rng.bernoulli(m.recall)) continue;
    const double dx = signed_offset(rng, m.jitter_px);
    const double dy = signed_offset(rng, m.jitter_px);
    const auto box = translate_inside(obj.box(), dx, dy, frame.width(), frame.height());
    const double objectness = 0.5 + 0.5 * rng.uniform();
    out.push_back(Proposal::from_box(box, objectness, obj.true_class(), bytes_per_pixel));

    const auto duplicates = rng.poisson(m.duplicate_rate);
    for (std::uint64_t d = 0; d < duplicates; ++d) {
      const double sx = std::trunc(m.duplicate_shift_frac * box.width() * (2.0 * rng.uniform() - 1.0));
      const double sy = std::trunc(m.duplicate_shift_frac * box.height() * (2.0 * rng.uniform() - 1.0));
      const auto dup = translate_inside(box, sx, sy, frame.width(), frame.height());
      const double score = objectness * (0.5 + 0.5 * rng.uniform());
      out.push_back(Proposal::from_box(dup, score, obj.true_class(), bytes_per_pixel));
    }
  }
  return out;
}

}  // namespace ecosense::oracles

namespace nlohmann {

using namespace ecosense::oracles;

ConfusionMatrix adl_serializer<ConfusionMatrix>::from_json(const json& j) {
  return ConfusionMatrix(j.at("rows").get<std::vector<std::vector<double>>>());
}

void adl_serializer<ConfusionMatrix>::to_json(json& j, const ConfusionMatrix& v) {
  j = json{{"rows", v.rows()}};
}

DifficultyModel adl_serializer<DifficultyModel>::from_json(const json& j) {
  DifficultyModel m;
  m.p_edge_correct_easy = j.at("p_edge_correct_easy").get<double>();
  m.p_edge_correct_hard = j.at("p_edge_correct_hard").get<double>();
  m.p_hard = j.at("p_hard").get<double>();
  m.tpr = j.at("tpr").get<double>();
  m.fpr = j.at("fpr").get<double>();
  m.validate();
  return m;
}

void adl_serializer<DifficultyModel>::to_json(json& j, const DifficultyModel& v) {
  j = json{{"p_edge_correct_easy", v.p_edge_correct_easy},
           {"p_edge_correct_hard", v.p_edge_correct_hard},
           {"p_hard", v.p_hard},
           {"tpr", v.tpr},
           {"fpr", v.fpr}};
}

LocalizerModel adl_serializer<LocalizerModel>::from_json(const json& j) {
  LocalizerModel m;
  m.recall = j.at("recall").get<double>();
  m.duplicate_rate = j.at("duplicate_rate").get<double>();
  m.jitter_px = j.at("jitter_px").get<double>();
  m.duplicate_shift_frac = j.value("duplicate_shift_frac", 0.05);
  m.validate();
  return m;
}

void adl_serializer<LocalizerModel>::to_json(json& j, const LocalizerModel& v) {
  j = json{{"recall", v.recall},
           {"duplicate_rate", v.duplicate_rate},
           {"jitter_px", v.jitter_px},
           {"duplicate_shift_frac", v.duplicate_shift_frac}};
}

}  // namespace nlohmann
