#pragma once

#include "infpush/prox.hpp"
#include "infpush/types.hpp"

namespace infpush {

/// g(a) = max_j (1/m) sum_{i in G_j} max(a_i, 0).
double eval_g(const Vec& a, const GroupLayout& layout);

/// Exact block update for the negative part: max(-s + a_plus, 0).
Vec a_minus_update(const Vec& s, const Vec& a_plus);

struct DrResult {
  Vec u;
  int iterations = 0;
  bool converged = true;
};

/// Minimizes 0.5||z - b||^2 + (1/(m*mu)) * max_j sum_{i in G_j} z_i over
/// z >= 0 by Douglas-Rachford splitting: the quadratic-plus-orthant piece has
/// a closed-form prox, the mixed-norm piece reduces to the ball projection.
/// Stops on ||u_n - u_{n-1}||_inf <= cfg.dr_tol. If state is non-null it is
/// used as the initial auxiliary point and left at the final one, which lets
/// consecutive solves against slowly moving b warm start each other.
DrResult dr_solve_a_plus(const Vec& b, const GroupLayout& layout, double mu,
                         const SolverConfig& cfg, Vec* state = nullptr);

struct ProxGResult {
  Vec a;
  int sweeps = 0;
  bool converged = true;
  // Objective of the split problem after every half sweep; non-increasing.
  std::vector<double> block_objective_trace;
};

/// prox of g scaled by 1/mu: argmin_a g(a) + (mu/2)||a - s||^2.
///
/// Works on the split a = a_plus - a_minus with both parts nonnegative,
/// alternating the closed-form a_minus update with the Douglas-Rachford
/// solve for a_plus until ||delta a_plus||_inf + ||delta a_minus||_inf
/// falls below cfg.bcd_tol.
ProxGResult prox_g(const Vec& s, const GroupLayout& layout, double mu,
                   const SolverConfig& cfg);

}  // namespace infpush
