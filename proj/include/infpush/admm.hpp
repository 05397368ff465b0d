#pragma once

#include "infpush/types.hpp"

#include <utility>

namespace infpush {

/// lambda * Omega(w) + max_j (1/m) sum_{i in G_j} (1 - (Xw)_k)_+
/// with Omega the l1 norm or half the squared l2 norm.
double objective(const Vec& w, const PairwiseSystem& sys, double lambda,
                 Regularizer reg);

/// Same, reusing a precomputed product Xw.
double objective_given_scores(const Vec& w, const Vec& Xw, Index m, Index n,
                              double lambda, Regularizer reg);

/// Final iterates of the alternating scheme. gamma is the scaled dual
/// variable; its update is exactly gamma += Xw + a - 1 each iteration.
struct AdmmState {
  Vec w;
  Vec a;
  Vec gamma;
  int iteration = 0;
};

/// Trains the scoring function by the alternating-direction scheme:
/// w-subproblem (ridge or lasso with effective regularization lambda/mu),
/// prox of the ranking loss, scaled dual ascent. Stops once the scaled
/// primal residual ||Xw + a - 1||_2 / sqrt(m n) and the relative change of
/// w both fall below cfg.outer_tol.
///
/// The returned model carries no normalization stats; attach them at the
/// call site when training on normalized data. When final_state is non-null
/// it receives the last iterates.
std::pair<Model, FitReport> fit(const Dataset& data, double lambda,
                                Regularizer reg, const SolverConfig& cfg,
                                AdmmState* final_state = nullptr);

/// w . x, with x first passed through the model's normalization if present.
double predict(const Model& model, const Vec& x);

/// Scores every row of the matrix.
Vec predict_all(const Model& model, const Mat& xs);

}  // namespace infpush
