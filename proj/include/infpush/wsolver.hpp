#pragma once

#include "infpush/types.hpp"

namespace infpush {

/// Ridge solution of 0.5||Xw - s||^2 + (reg/2)||w||^2 through the normal
/// equations (X^T X + reg I) w = X^T s, with iterative refinement until
/// the residual drops below tol * (1 + ||X^T s||).
Vec solve_ridge(const Mat& X, const Vec& s, double reg, double tol);

struct LassoResult {
  Vec w;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;
};

/// Lasso 0.5||Xw - s||^2 + reg*||w||_1 by monotone FISTA on the Gram form,
/// stopping when the coordinatewise subgradient residual falls below tol.
/// Non-convergence within max_iter returns the best iterate with
/// converged = false.
LassoResult solve_lasso(const Mat& X, const Vec& s, double reg,
                        const Vec* warm, double tol, int max_iter);

/// Repeated w-subproblem solves against a fixed design matrix. Caches the
/// Gram matrix, its factorization (ridge) or spectral bound (lasso), and the
/// previous solution for warm starting. A lasso call that misses its budget
/// is reported through last_converged() and gets a doubled budget next time.
class WSolver {
 public:
  WSolver(const Mat& X, double reg, Regularizer kind, double tol);

  Vec solve(const Vec& s);
  bool last_converged() const { return last_converged_; }
  double lipschitz() const { return lipschitz_; }

 private:
  const Mat& X_;
  double reg_;
  Regularizer kind_;
  double tol_;

  Mat gram_;
  Eigen::LLT<Mat> ridge_factor_;
  double lipschitz_ = 0.0;
  Vec warm_;
  int lasso_budget_ = 20000;
  bool last_converged_ = true;
};

namespace detail {
/// Largest eigenvalue of a symmetric PSD matrix by power iteration
/// (20 rounds, 1e-6 relative tolerance).
double spectral_bound(const Mat& gram);
}  // namespace detail

}  // namespace infpush
