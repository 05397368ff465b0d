#include "infpush/types.hpp"

namespace infpush {

void Dataset::validate() const {
  if (positives.rows() < 1 || negatives.rows() < 1) {
    throw std::invalid_argument("dataset needs at least one example per class");
  }
  if (positives.cols() != negatives.cols()) {
    throw std::invalid_argument("positives and negatives disagree on feature count");
  }
  if (!positives.allFinite() || !negatives.allFinite()) {
    throw std::invalid_argument("dataset contains non-finite values");
  }
  if (feature_names && static_cast<Index>(feature_names->size()) != positives.cols()) {
    throw std::invalid_argument("feature name count does not match feature count");
  }
}

PairwiseSystem build_pairwise_system(const Dataset& data) {
  data.validate();
  const Index m = data.num_positives();
  const Index n = data.num_negatives();
  const Index d = data.dim();

  PairwiseSystem sys;
  sys.m = m;
  sys.n = n;
  sys.X.resize(m * n, d);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      sys.X.row(j * m + i) = data.positives.row(i) - data.negatives.row(j);
    }
  }
  return sys;
}

void SolverConfig::validate() const {
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(eta > 0.0 && eta < 2.0)) {
    throw std::invalid_argument("eta must lie strictly inside (0, 2)");
  }
  if (outer_max_iter < 1 || bcd_max_iter < 1 || dr_max_iter < 1) {
    throw std::invalid_argument("iteration caps must be at least 1");
  }
  if (!(outer_tol > 0.0) || !(bcd_tol > 0.0) || !(dr_tol > 0.0) ||
      !(subproblem_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

Regularizer regularizer_from_string(const std::string& s) {
  if (s == "l1" || s == "L1") return Regularizer::L1;
  if (s == "l2" || s == "L2") return Regularizer::L2;
  throw std::invalid_argument("unknown regularizer '" + s + "' (expected l1 or l2)");
}

}  // namespace infpush
