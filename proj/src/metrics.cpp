#include "infpush/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace infpush {

void RankScores::validate() const {
  if (pos_scores.size() < 1 || neg_scores.size() < 1) {
    throw std::invalid_argument("rank scores need at least one score per class");
  }
  if (!pos_scores.allFinite() || !neg_scores.allFinite()) {
    throw std::invalid_argument("rank scores must be finite");
  }
}

int infinite_push_loss(const RankScores& scores) {
  scores.validate();
  int worst = 0;
  for (Index j = 0; j < scores.neg_scores.size(); ++j) {
    int count = 0;
    for (Index i = 0; i < scores.pos_scores.size(); ++i) {
      if (scores.pos_scores[i] <= scores.neg_scores[j]) ++count;
    }
    worst = std::max(worst, count);
  }
  return worst;
}

double pos_at_top_rate(const RankScores& scores) {
  scores.validate();
  double top_neg = scores.neg_scores.maxCoeff();
  int count = 0;
  for (Index i = 0; i < scores.pos_scores.size(); ++i) {
    if (scores.pos_scores[i] > top_neg) ++count;
  }
  return static_cast<double>(count) /
         static_cast<double>(scores.pos_scores.size());
}

FeatureMetrics feature_metrics(const std::vector<int>& selected,
                               const std::vector<int>& relevant) {
  std::unordered_set<int> sel(selected.begin(), selected.end());
  std::unordered_set<int> rel(relevant.begin(), relevant.end());
  int hits = 0;
  for (int idx : sel) {
    if (rel.count(idx)) ++hits;
  }
  FeatureMetrics out;
  out.precision = sel.empty() ? 0.0 : static_cast<double>(hits) / sel.size();
  out.recall = rel.empty() ? 0.0 : static_cast<double>(hits) / rel.size();
  out.f_measure = (out.precision + out.recall) > 0.0
                      ? 2.0 * out.precision * out.recall /
                            (out.precision + out.recall)
                      : 0.0;
  return out;
}

std::vector<int> selected_features(const Vec& weights, double threshold) {
  std::vector<int> out;
  for (Index i = 0; i < weights.size(); ++i) {
    if (std::abs(weights[i]) > threshold) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace infpush
