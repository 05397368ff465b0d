#include "infpush/wsolver.hpp"

#include "infpush/prox.hpp"

#include <algorithm>
#include <cmath>

namespace infpush {

namespace detail {

double spectral_bound(const Mat& gram) {
  const Index d = gram.rows();
  if (d == 0) return 0.0;
  Vec x = Vec::Ones(d) / std::sqrt(static_cast<double>(d));
  double value = 0.0;
  for (int it = 0; it < 20; ++it) {
    Vec y = gram * x;
    double norm = y.norm();
    if (norm <= 0.0) return 0.0;
    x = y / norm;
    double next = x.dot(gram * x);
    if (std::abs(next - value) <= 1e-6 * std::max(1.0, std::abs(next))) {
      value = next;
      break;
    }
    value = next;
  }
  return value;
}

namespace {

struct LassoProblem {
  const Mat& gram;
  const Vec& lin;  // X^T s
  double reg;

  double objective(const Vec& w, const Vec& gram_w) const {
    return 0.5 * w.dot(gram_w) - lin.dot(w) + reg * w.lpNorm<1>();
  }

  // Largest coordinatewise violation of the stationarity conditions.
  double kkt_residual(const Vec& w, const Vec& gram_w) const {
    double worst = 0.0;
    for (Index i = 0; i < w.size(); ++i) {
      double grad = gram_w[i] - lin[i];
      double viol = w[i] == 0.0 ? std::max(std::abs(grad) - reg, 0.0)
                                : std::abs(grad + (w[i] > 0.0 ? reg : -reg));
      worst = std::max(worst, viol);
    }
    return worst;
  }
};

// Monotone FISTA: accepted iterates never increase the objective, the
// momentum sequence still uses the raw prox point.
LassoResult run_fista(const LassoProblem& prob, double lipschitz,
                      const Vec& start, double tol, int max_iter) {
  const double step = 1.0 / std::max(lipschitz * 1.01, 1e-12);

  LassoResult res;
  Vec x = start;
  Vec gram_x = prob.gram * x;
  double fx = prob.objective(x, gram_x);

  Vec y = x;
  Vec gram_y = gram_x;
  Vec x_prev = x;
  double t = 1.0;

  res.objective_trace.push_back(fx);
  if (prob.kkt_residual(x, gram_x) <= tol) {
    res.w = x;
    res.converged = true;
    return res;
  }

  for (int it = 1; it <= max_iter; ++it) {
    Vec z = soft_threshold(y - step * (gram_y - prob.lin), step * prob.reg);
    Vec gram_z = prob.gram * z;
    double fz = prob.objective(z, gram_z);

    x_prev = x;
    if (fz <= fx) {
      x = z;
      gram_x = gram_z;
      fx = fz;
    }  // otherwise keep x, the momentum point still moves

    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = x + (t / t_next) * (z - x) + ((t - 1.0) / t_next) * (x - x_prev);
    gram_y = prob.gram * y;
    t = t_next;

    res.iterations = it;
    res.objective_trace.push_back(fx);
    if (prob.kkt_residual(x, gram_x) <= tol) {
      res.converged = true;
      break;
    }
  }
  res.w = x;
  return res;
}

Vec ridge_from_factor(const Eigen::LLT<Mat>& factor, const Mat& lhs,
                      const Vec& rhs, double tol) {
  Vec w = factor.solve(rhs);
  double target = tol * (1.0 + rhs.norm());
  for (int refine = 0; refine < 3; ++refine) {
    Vec residual = rhs - lhs * w;
    if (residual.norm() <= target) break;
    w += factor.solve(residual);
  }
  return w;
}

}  // namespace
}  // namespace detail

Vec solve_ridge(const Mat& X, const Vec& s, double reg, double tol) {
  if (X.rows() != s.size()) {
    throw std::invalid_argument("solve_ridge: X rows must match s length");
  }
  if (!(reg > 0.0)) throw std::invalid_argument("solve_ridge: reg must be positive");
  Mat lhs = X.transpose() * X;
  lhs.diagonal().array() += reg;
  Eigen::LLT<Mat> factor(lhs);
  if (factor.info() != Eigen::Success) {
    throw std::runtime_error("solve_ridge: factorization failed");
  }
  return detail::ridge_from_factor(factor, lhs, X.transpose() * s, tol);
}

LassoResult solve_lasso(const Mat& X, const Vec& s, double reg,
                        const Vec* warm, double tol, int max_iter) {
  if (X.rows() != s.size()) {
    throw std::invalid_argument("solve_lasso: X rows must match s length");
  }
  if (!(reg > 0.0)) throw std::invalid_argument("solve_lasso: reg must be positive");
  if (warm && warm->size() != X.cols()) {
    throw std::invalid_argument("solve_lasso: warm start has wrong length");
  }
  Mat gram = X.transpose() * X;
  Vec lin = X.transpose() * s;
  detail::LassoProblem prob{gram, lin, reg};
  double lipschitz = detail::spectral_bound(gram);
  Vec start = warm ? *warm : Vec::Zero(X.cols());
  return detail::run_fista(prob, lipschitz, start, tol, max_iter);
}

WSolver::WSolver(const Mat& X, double reg, Regularizer kind, double tol)
    : X_(X), reg_(reg), kind_(kind), tol_(tol) {
  if (!(reg > 0.0)) throw std::invalid_argument("WSolver: reg must be positive");
  gram_ = X.transpose() * X;
  if (kind_ == Regularizer::L2) {
    Mat lhs = gram_;
    lhs.diagonal().array() += reg_;
    gram_ = lhs;  // store the shifted matrix, it is the one we solve with
    ridge_factor_.compute(gram_);
    if (ridge_factor_.info() != Eigen::Success) {
      throw std::runtime_error("WSolver: ridge factorization failed");
    }
  } else {
    lipschitz_ = detail::spectral_bound(gram_);
  }
  warm_ = Vec::Zero(X.cols());
}

Vec WSolver::solve(const Vec& s) {
  if (s.size() != X_.rows()) {
    throw std::invalid_argument("WSolver::solve: s has wrong length");
  }
  Vec lin = X_.transpose() * s;
  if (kind_ == Regularizer::L2) {
    warm_ = detail::ridge_from_factor(ridge_factor_, gram_, lin, tol_);
    last_converged_ = true;
    return warm_;
  }
  detail::LassoProblem prob{gram_, lin, reg_};
  LassoResult res =
      detail::run_fista(prob, lipschitz_, warm_, tol_, lasso_budget_);
  last_converged_ = res.converged;
  if (!res.converged) {
    lasso_budget_ = std::min(lasso_budget_ * 2, 1 << 21);
  }
  warm_ = res.w;
  return warm_;
}

}  // namespace infpush
