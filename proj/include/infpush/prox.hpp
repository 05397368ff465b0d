#pragma once

#include "infpush/types.hpp"

namespace infpush {

/// Contiguous group structure of a stacked vector: group_count groups of
/// group_size entries each, group j occupying [j*group_size, (j+1)*group_size).
struct GroupLayout {
  Index group_size = 1;   // m
  Index group_count = 1;  // n

  Index total() const { return group_size * group_count; }
  void check_vector(const Vec& v) const;
};

/// Componentwise sign(v) * max(|v| - tau, 0).
Vec soft_threshold(const Vec& v, double tau);

/// Componentwise max(v, 0).
Vec project_nonneg(const Vec& v);

/// Euclidean projection of v onto { u : sum_j max_{i in G_j} |u_i| <= tau }.
///
/// Solved exactly through the KKT system: each group gets a clip level t_j,
/// the optimal levels satisfy sum_j t_j = tau with equal marginal costs
/// theta = sum_{|v_i| > t_j} (|v_i| - t_j) across active groups. t_j(theta)
/// is piecewise linear, so theta is located by bisection over the sorted
/// breakpoints and resolved in closed form on the final segment.
/// O(N log N) with N = m*n.
Vec project_l1_linf_ball(const Vec& v, const GroupLayout& layout, double tau);

/// prox of tau * max_j sum_{i in G_j} |.|, via the Moreau identity
/// prox(v) = v - project_l1_linf_ball(v, tau).
Vec prox_linf_l1(const Vec& v, const GroupLayout& layout, double tau);

/// Closed-form prox of rho * (0.5||. - b||^2 + indicator(. >= 0)):
/// project_nonneg((v + rho*b) / (1 + rho)).
Vec prox_f2(const Vec& v, const Vec& b, double rho);

}  // namespace infpush
