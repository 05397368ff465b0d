#include "infpush/admm.hpp"

#include "infpush/metrics.hpp"
#include "infpush/push_prox.hpp"
#include "infpush/wsolver.hpp"

#include <cmath>
#include <sstream>

namespace infpush {

double objective_given_scores(const Vec& w, const Vec& Xw, Index m, Index n,
                              double lambda, Regularizer reg) {
  double penalty = reg == Regularizer::L1 ? w.lpNorm<1>() : 0.5 * w.squaredNorm();
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    double sum = 0.0;
    for (Index i = 0; i < m; ++i) {
      sum += std::max(1.0 - Xw[j * m + i], 0.0);
    }
    worst = std::max(worst, sum / static_cast<double>(m));
  }
  return lambda * penalty + worst;
}

double objective(const Vec& w, const PairwiseSystem& sys, double lambda,
                 Regularizer reg) {
  if (w.size() != sys.X.cols()) {
    throw std::invalid_argument("objective: w length does not match system");
  }
  Vec Xw = sys.X * w;
  return objective_given_scores(w, Xw, sys.m, sys.n, lambda, reg);
}

std::pair<Model, FitReport> fit(const Dataset& data, double lambda,
                                Regularizer reg, const SolverConfig& cfg,
                                AdmmState* final_state) {
  if (!(lambda > 0.0)) throw std::invalid_argument("fit: lambda must be positive");
  cfg.validate();
  PairwiseSystem sys = build_pairwise_system(data);

  const Index rows = sys.rows();
  const GroupLayout layout{sys.m, sys.n};
  const double scale = std::sqrt(static_cast<double>(rows));
  const Vec ones = Vec::Ones(rows);

  WSolver wsolver(sys.X, lambda / cfg.mu, reg, cfg.subproblem_tol);

  Vec a = Vec::Zero(rows);
  Vec gamma = Vec::Zero(rows);
  Vec w = Vec::Zero(sys.X.cols());

  FitReport report;
  bool have_prev_w = false;
  Vec w_prev;

  for (int k = 0; k < cfg.outer_max_iter; ++k) {
    Vec s = ones - a - gamma;
    w = wsolver.solve(s);
    Vec Xw = sys.X * w;

    s = ones - gamma - Xw;
    a = prox_g(s, layout, cfg.mu, cfg).a;

    Vec residual = Xw + a - ones;
    gamma += residual;

    if (!w.allFinite() || !a.allFinite() || !gamma.allFinite()) {
      std::ostringstream msg;
      msg << "fit: non-finite values at iteration " << k + 1
          << " (lambda=" << lambda << ", mu=" << cfg.mu << ")";
      throw std::runtime_error(msg.str());
    }

    double res_norm = residual.norm();
    report.objective_trace.push_back(
        objective_given_scores(w, Xw, sys.m, sys.n, lambda, reg));
    report.primal_residual_trace.push_back(res_norm);
    report.iterations = k + 1;

    double w_change = have_prev_w
                          ? (w - w_prev).norm() / std::max(1.0, w.norm())
                          : std::numeric_limits<double>::infinity();
    w_prev = w;
    have_prev_w = true;

    if (res_norm / scale <= cfg.outer_tol && w_change <= cfg.outer_tol) {
      report.converged = true;
      break;
    }
  }

  report.nonzero_count = static_cast<int>(selected_features(w).size());
  if (final_state) {
    final_state->w = w;
    final_state->a = a;
    final_state->gamma = gamma;
    final_state->iteration = report.iterations;
  }

  Model model;
  model.weights = w;
  model.lambda = lambda;
  model.regularizer = reg;
  return {std::move(model), std::move(report)};
}

double predict(const Model& model, const Vec& x) {
  if (model.norm_stats) {
    const NormStats& st = *model.norm_stats;
    if (x.size() != st.means.size() || x.size() != model.weights.size()) {
      throw std::invalid_argument("predict: dimension mismatch");
    }
    return model.weights.dot(
        ((x - st.means).array() / st.stds.array()).matrix());
  }
  if (x.size() != model.weights.size()) {
    throw std::invalid_argument("predict: dimension mismatch");
  }
  return model.weights.dot(x);
}

Vec predict_all(const Model& model, const Mat& xs) {
  Vec out(xs.rows());
  for (Index i = 0; i < xs.rows(); ++i) {
    out[i] = predict(model, xs.row(i).transpose());
  }
  return out;
}

}  // namespace infpush
