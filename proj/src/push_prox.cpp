#include "infpush/push_prox.hpp"

#include <cassert>
#include <cmath>

namespace infpush {

double eval_g(const Vec& a, const GroupLayout& layout) {
  layout.check_vector(a);
  const Index m = layout.group_size;
  double worst = 0.0;
  for (Index j = 0; j < layout.group_count; ++j) {
    double sum = 0.0;
    for (Index i = 0; i < m; ++i) sum += std::max(a[j * m + i], 0.0);
    worst = std::max(worst, sum / static_cast<double>(m));
  }
  return worst;
}

Vec a_minus_update(const Vec& s, const Vec& a_plus) {
  assert(s.size() == a_plus.size());
  return (a_plus - s).cwiseMax(0.0);
}

DrResult dr_solve_a_plus(const Vec& b, const GroupLayout& layout, double mu,
                         const SolverConfig& cfg, Vec* state) {
  layout.check_vector(b);
  if (!(mu > 0.0)) throw std::invalid_argument("dr_solve_a_plus: mu must be positive");

  const double weight = 1.0 / (static_cast<double>(layout.group_size) * mu);
  const double radius = cfg.rho * weight;

  Vec v = (state && state->size() == b.size()) ? *state : Vec::Zero(b.size());
  DrResult res;
  Vec u = prox_f2(v, b, cfg.rho);
  for (int it = 1; it <= cfg.dr_max_iter; ++it) {
    Vec reflected = 2.0 * u - v;
    v += cfg.eta * (prox_linf_l1(reflected, layout, radius) - u);
    Vec u_next = prox_f2(v, b, cfg.rho);
    double change = (u_next - u).lpNorm<Eigen::Infinity>();
    u = std::move(u_next);
    res.iterations = it;
    if (change <= cfg.dr_tol) {
      res.converged = true;
      if (state) *state = v;
      res.u = std::move(u);
      return res;
    }
  }
  res.converged = false;  // cap hit, hand back the best iterate
  if (state) *state = v;
  res.u = std::move(u);
  return res;
}

ProxGResult prox_g(const Vec& s, const GroupLayout& layout, double mu,
                   const SolverConfig& cfg) {
  layout.check_vector(s);
  if (!(mu > 0.0)) throw std::invalid_argument("prox_g: mu must be positive");

  const double weight = 1.0 / (static_cast<double>(layout.group_size) * mu);
  const Index size = s.size();

  Vec a_plus = Vec::Zero(size);
  Vec a_minus = Vec::Zero(size);
  Vec dr_state = Vec::Zero(size);

  // Split objective tracked across half sweeps for diagnostics.
  auto split_objective = [&](const Vec& plus, const Vec& minus) {
    double quad = 0.5 * (plus - minus - s).squaredNorm();
    double worst = 0.0;
    for (Index j = 0; j < layout.group_count; ++j) {
      double sum = plus.segment(j * layout.group_size, layout.group_size).sum();
      worst = std::max(worst, sum);
    }
    return quad + weight * worst;
  };

  ProxGResult res;
  bool all_converged = true;
  for (int sweep = 1; sweep <= cfg.bcd_max_iter; ++sweep) {
    Vec minus_next = a_minus_update(s, a_plus);
    res.block_objective_trace.push_back(split_objective(a_plus, minus_next));

    Vec b = minus_next + s;
    if (cfg.strict_reset) dr_state.setZero();
    DrResult dr = dr_solve_a_plus(b, layout, mu, cfg, &dr_state);
    all_converged = all_converged && dr.converged;
    res.block_objective_trace.push_back(split_objective(dr.u, minus_next));

    double change = (dr.u - a_plus).lpNorm<Eigen::Infinity>() +
                    (minus_next - a_minus).lpNorm<Eigen::Infinity>();
    a_plus = std::move(dr.u);
    a_minus = std::move(minus_next);
    res.sweeps = sweep;
    if (change <= cfg.bcd_tol) {
      res.converged = all_converged;
      res.a = a_plus - a_minus;
      return res;
    }
  }
  res.converged = false;
  res.a = a_plus - a_minus;
  return res;
}

}  // namespace infpush
