#pragma once

#include "infpush/types.hpp"

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace infpush {

/// Synthetic problem description: d features of which the first r carry the
/// class signal, the rest are standard normal noise.
struct ToySpec {
  int d = 2;
  int r = 1;
  int n_samples = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Draws a balanced two-class sample. The relevant block follows
/// N(+mu, Sigma) for positives and N(-mu, Sigma) for negatives, with mu
/// uniform on {-1,+1}^r and Sigma a trace-normalized Wishart draw
/// (identity scale, r + 2 degrees of freedom). Noise columns are iid
/// standard normal. Fully determined by the seed.
/// Returns the dataset and the relevant column indices {0, ..., r-1}.
std::pair<Dataset, std::vector<int>> generate_toy(const ToySpec& spec);

/// Per-column mean and population standard deviation over both classes.
/// Near-constant columns get std = 1 so that scaling stays finite.
NormStats fit_normalizer(const Dataset& train);

Dataset apply_normalizer(const NormStats& stats, const Dataset& data);

/// CSV with the label first ({+1,-1} or {1,0}) and features after, optional
/// header detected by a non-numeric first cell. Malformed rows and
/// single-class files are rejected with the offending line number.
Dataset load_csv(const std::filesystem::path& path);

/// Writes positives (label 1) then negatives (label -1), 17 significant
/// digits, header included when feature names are present.
void save_csv(const std::filesystem::path& path, const Dataset& data);

void save_model(const std::filesystem::path& path, const Model& model);
Model load_model(const std::filesystem::path& path);

/// Stratified split: the given fraction of each class goes to the first
/// dataset, the rest to the second. Each side keeps at least one example
/// per class. Deterministic in the seed.
std::pair<Dataset, Dataset> stratified_split(const Dataset& data,
                                             double fraction,
                                             std::uint64_t seed);

}  // namespace infpush
