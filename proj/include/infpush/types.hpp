#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace infpush {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

enum class Regularizer { L1, L2 };

/// Bipartite ranking sample: one row per example, positives and negatives
/// kept separate. Both matrices must share the same column count and
/// contain only finite values.
struct Dataset {
  Mat positives;  // m x d
  Mat negatives;  // n x d
  std::optional<std::vector<std::string>> feature_names;

  Index num_positives() const { return positives.rows(); }
  Index num_negatives() const { return negatives.rows(); }
  Index dim() const { return positives.cols(); }

  void validate() const;
};

/// Difference matrix X with row k = j*m + i holding positives[i] - negatives[j].
/// Rows are grouped by negative example: group j is the contiguous block
/// [j*m, (j+1)*m).
struct PairwiseSystem {
  Mat X;  // (m*n) x d
  Index m = 0;
  Index n = 0;

  Index rows() const { return m * n; }
};

PairwiseSystem build_pairwise_system(const Dataset& data);

/// Per-feature affine normalization (x - mean) / std.
struct NormStats {
  Vec means;
  Vec stds;
};

/// Linear scoring model f(x) = w . x, optionally preceded by the stored
/// normalization.
struct Model {
  Vec weights;
  double lambda = 0.0;
  Regularizer regularizer = Regularizer::L2;
  std::optional<NormStats> norm_stats;
};

struct SolverConfig {
  double mu = 1.0;    // quadratic penalty of the outer splitting
  double rho = 1.0;   // prox scale inside Douglas-Rachford
  double eta = 1.0;   // Douglas-Rachford relaxation, must lie in (0, 2)

  int outer_max_iter = 500;
  int bcd_max_iter = 500;
  int dr_max_iter = 2000;

  double outer_tol = 1e-5;
  double bcd_tol = 1e-8;
  double dr_tol = 1e-8;
  double subproblem_tol = 1e-8;

  // Reset the Douglas-Rachford state at every block sweep instead of
  // carrying it over. Slower; matches the textbook iteration exactly.
  bool strict_reset = false;

  void validate() const;
};

struct FitReport {
  int iterations = 0;
  std::vector<double> objective_trace;
  std::vector<double> primal_residual_trace;  // ||Xw + a - 1||_2 per iteration
  int nonzero_count = 0;
  bool converged = false;
};

inline const char* to_string(Regularizer r) {
  return r == Regularizer::L1 ? "l1" : "l2";
}

Regularizer regularizer_from_string(const std::string& s);

}  // namespace infpush
