#pragma once

#include "infpush/types.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace infpush {

enum class TuneMetric { PosAtTop, NegInfPushLoss };

struct TuneGrid {
  std::vector<double> lambdas;
  double split_fraction = 0.7;
  TuneMetric metric = TuneMetric::PosAtTop;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TuneResult {
  double best_lambda = 0.0;
  Model model;       // refit on the normalized full dataset, stats attached
  FitReport report;  // report of the final refit
  std::vector<double> scores;  // validation score per grid entry
};

/// Grid search over lambda on a stratified split of `data`: fit each value
/// on the larger slice, score the held-out slice, refit the winner on the
/// whole set. Ties go to the larger lambda. Grid entries run on up to
/// `threads` workers (0 = hardware concurrency); results are merged by
/// grid order, so the outcome does not depend on scheduling.
TuneResult tune_lambda(const Dataset& data, Regularizer reg,
                       const TuneGrid& grid, const SolverConfig& cfg,
                       int threads = 0);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for_index(int count, int threads,
                        const std::function<void(int)>& fn);

}  // namespace infpush
