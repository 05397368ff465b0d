#include "infpush/tune.hpp"

#include "infpush/admm.hpp"
#include "infpush/data.hpp"
#include "infpush/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace infpush {

void TuneGrid::validate() const {
  if (lambdas.empty()) throw std::invalid_argument("tune grid must not be empty");
  for (double l : lambdas) {
    if (!(l > 0.0)) throw std::invalid_argument("tune grid values must be positive");
  }
  if (!(split_fraction > 0.0 && split_fraction < 1.0)) {
    throw std::invalid_argument("split fraction must lie strictly inside (0, 1)");
  }
}

void parallel_for_index(int count, int threads,
                        const std::function<void(int)>& fn) {
  if (count <= 0) return;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int workers = threads <= 0 ? hw : std::min(threads, hw);
  workers = std::min(workers, count);

  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

TuneResult tune_lambda(const Dataset& data, Regularizer reg,
                       const TuneGrid& grid, const SolverConfig& cfg,
                       int threads) {
  grid.validate();
  auto [train, valid] = stratified_split(data, grid.split_fraction, grid.seed);

  NormStats stats = fit_normalizer(train);
  Dataset train_norm = apply_normalizer(stats, train);

  const int count = static_cast<int>(grid.lambdas.size());
  std::vector<double> scores(static_cast<size_t>(count));

  parallel_for_index(count, threads, [&](int idx) {
    auto [model, report] =
        fit(train_norm, grid.lambdas[static_cast<size_t>(idx)], reg, cfg);
    model.norm_stats = stats;
    RankScores rs{predict_all(model, valid.positives),
                  predict_all(model, valid.negatives)};
    scores[static_cast<size_t>(idx)] =
        grid.metric == TuneMetric::PosAtTop
            ? pos_at_top_rate(rs)
            : -static_cast<double>(infinite_push_loss(rs));
  });

  // Ties go to the larger lambda (sparser model); scan in grid order and
  // accept on >=, assuming callers pass ascending grids. Unsorted grids
  // are handled by comparing the lambda value on exact ties.
  int best = 0;
  for (int i = 1; i < count; ++i) {
    double s = scores[static_cast<size_t>(i)];
    double b = scores[static_cast<size_t>(best)];
    if (s > b || (s == b && grid.lambdas[static_cast<size_t>(i)] >=
                                grid.lambdas[static_cast<size_t>(best)])) {
      best = i;
    }
  }

  TuneResult result;
  result.best_lambda = grid.lambdas[static_cast<size_t>(best)];
  result.scores = std::move(scores);

  NormStats full_stats = fit_normalizer(data);
  auto [model, report] =
      fit(apply_normalizer(full_stats, data), result.best_lambda, reg, cfg);
  model.norm_stats = std::move(full_stats);
  result.model = std::move(model);
  result.report = std::move(report);
  return result;
}

}  // namespace infpush
