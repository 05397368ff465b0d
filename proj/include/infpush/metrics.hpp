#pragma once

#include "infpush/types.hpp"

#include <vector>

namespace infpush {

struct RankScores {
  Vec pos_scores;
  Vec neg_scores;

  void validate() const;
};

/// Worst-negative pairwise error count: max over negatives j of
/// #{ i : pos[i] <= neg[j] }. Ties count as errors.
int infinite_push_loss(const RankScores& scores);

/// Fraction of positives scored strictly above every negative.
double pos_at_top_rate(const RankScores& scores);

struct FeatureMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

FeatureMetrics feature_metrics(const std::vector<int>& selected,
                               const std::vector<int>& relevant);

/// Indices of weights with |w_i| > threshold.
std::vector<int> selected_features(const Vec& weights,
                                   double threshold = 1e-8);

}  // namespace infpush
