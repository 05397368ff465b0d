#include "infpush/data.hpp"

#include "infpush/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace infpush {

void ToySpec::validate() const {
  if (r < 1 || r > d) {
    throw std::invalid_argument("toy spec requires 1 <= r <= d");
  }
  if (n_samples < 2) {
    throw std::invalid_argument("toy spec requires at least 2 samples");
  }
}

std::pair<Dataset, std::vector<int>> generate_toy(const ToySpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const int r = spec.r;
  const int noise = spec.d - spec.r;
  const Index n_pos = (spec.n_samples + 1) / 2;
  const Index n_neg = spec.n_samples - n_pos;

  Vec mean(r);
  for (int k = 0; k < r; ++k) mean[k] = rng.rademacher();

  // Wishart draw with identity scale and r + 2 degrees of freedom,
  // rescaled so the trace equals r (unit variance on average).
  Mat scatter = Mat::Zero(r, r);
  for (int k = 0; k < r + 2; ++k) {
    Vec z(r);
    for (int i = 0; i < r; ++i) z[i] = rng.normal();
    scatter.noalias() += z * z.transpose();
  }
  scatter *= static_cast<double>(r) / scatter.trace();
  Eigen::LLT<Mat> chol(scatter);
  if (chol.info() != Eigen::Success) {
    scatter.diagonal().array() += 1e-10;
    chol.compute(scatter);
  }
  Mat factor = chol.matrixL();

  auto draw_row = [&](double sign) {
    Eigen::RowVectorXd row(spec.d);
    Vec z(r);
    for (int i = 0; i < r; ++i) z[i] = rng.normal();
    row.head(r) = (sign * mean + factor * z).transpose();
    for (int i = 0; i < noise; ++i) row[r + i] = rng.normal();
    return row;
  };

  Dataset data;
  data.positives.resize(n_pos, spec.d);
  data.negatives.resize(n_neg, spec.d);
  for (Index i = 0; i < n_pos; ++i) data.positives.row(i) = draw_row(+1.0);
  for (Index i = 0; i < n_neg; ++i) data.negatives.row(i) = draw_row(-1.0);

  std::vector<int> relevant(r);
  std::iota(relevant.begin(), relevant.end(), 0);
  return {std::move(data), std::move(relevant)};
}

NormStats fit_normalizer(const Dataset& train) {
  train.validate();
  const Index d = train.dim();
  const double count =
      static_cast<double>(train.num_positives() + train.num_negatives());

  NormStats stats;
  stats.means.resize(d);
  stats.stds.resize(d);
  for (Index c = 0; c < d; ++c) {
    double sum = train.positives.col(c).sum() + train.negatives.col(c).sum();
    double mean = sum / count;
    double sq = (train.positives.col(c).array() - mean).square().sum() +
                (train.negatives.col(c).array() - mean).square().sum();
    double sd = std::sqrt(sq / count);
    stats.means[c] = mean;
    stats.stds[c] = sd > 1e-12 * (1.0 + std::abs(mean)) ? sd : 1.0;
  }
  return stats;
}

Dataset apply_normalizer(const NormStats& stats, const Dataset& data) {
  if (stats.means.size() != data.dim()) {
    throw std::invalid_argument("normalizer dimension does not match data");
  }
  Dataset out = data;
  for (Index c = 0; c < data.dim(); ++c) {
    out.positives.col(c) =
        (data.positives.col(c).array() - stats.means[c]) / stats.stds[c];
    out.negatives.col(c) =
        (data.negatives.col(c).array() - stats.means[c]) / stats.stds[c];
  }
  return out;
}

namespace {

bool parse_double(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects '+'
  if (begin == end) return false;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    size_t a = cell.find_first_not_of(" \t\r");
    size_t b = cell.find_last_not_of(" \t\r");
    cells.push_back(a == std::string::npos ? std::string()
                                           : cell.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }

  std::vector<std::vector<double>> pos_rows, neg_rows;
  std::optional<std::vector<std::string>> names;
  Index d = -1;
  std::string line;
  int line_no = 0;
  bool first_content_line = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    auto cells = split_line(line);
    if (first_content_line) {
      double probe;
      if (!parse_double(cells.front(), probe)) {
        // header row: feature names follow the label column
        names.emplace(cells.begin() + 1, cells.end());
        first_content_line = false;
        continue;
      }
      first_content_line = false;
    }
    if (cells.size() < 2) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected a label and at least one feature");
    }
    double label;
    if (!parse_double(cells[0], label) ||
        (label != 1.0 && label != -1.0 && label != 0.0)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": label must be one of {+1, -1, 1, 0}");
    }
    std::vector<double> row(cells.size() - 1);
    for (size_t c = 1; c < cells.size(); ++c) {
      if (!parse_double(cells[c], row[c - 1])) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": non-numeric feature value '" + cells[c] + "'");
      }
    }
    if (d < 0) {
      d = static_cast<Index>(row.size());
    } else if (static_cast<Index>(row.size()) != d) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": inconsistent column count");
    }
    (label == 1.0 ? pos_rows : neg_rows).push_back(std::move(row));
  }

  if (pos_rows.empty() || neg_rows.empty()) {
    throw std::runtime_error(path.string() +
                             ": file must contain both classes");
  }

  Dataset data;
  data.positives.resize(static_cast<Index>(pos_rows.size()), d);
  data.negatives.resize(static_cast<Index>(neg_rows.size()), d);
  for (size_t i = 0; i < pos_rows.size(); ++i) {
    for (Index c = 0; c < d; ++c) data.positives(static_cast<Index>(i), c) = pos_rows[i][static_cast<size_t>(c)];
  }
  for (size_t i = 0; i < neg_rows.size(); ++i) {
    for (Index c = 0; c < d; ++c) data.negatives(static_cast<Index>(i), c) = neg_rows[i][static_cast<size_t>(c)];
  }
  if (names && static_cast<Index>(names->size()) == d) data.feature_names = names;
  data.validate();
  return data;
}

namespace {

void write_row(std::FILE* out, int label, const Eigen::RowVectorXd& row) {
  std::fprintf(out, "%d", label);
  for (Index c = 0; c < row.size(); ++c) {
    std::fprintf(out, ",%.17g", row[c]);
  }
  std::fprintf(out, "\n");
}

}  // namespace

void save_csv(const std::filesystem::path& path, const Dataset& data) {
  data.validate();
  std::FILE* out = std::fopen(path.string().c_str(), "w");
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  if (data.feature_names) {
    std::fprintf(out, "label");
    for (const auto& name : *data.feature_names) {
      std::fprintf(out, ",%s", name.c_str());
    }
    std::fprintf(out, "\n");
  }
  for (Index i = 0; i < data.num_positives(); ++i) {
    write_row(out, 1, data.positives.row(i));
  }
  for (Index i = 0; i < data.num_negatives(); ++i) {
    write_row(out, -1, data.negatives.row(i));
  }
  std::fclose(out);
}

void save_model(const std::filesystem::path& path, const Model& model) {
  nlohmann::json doc;
  doc["weights"] = std::vector<double>(model.weights.begin(), model.weights.end());
  doc["lambda"] = model.lambda;
  doc["regularizer"] = to_string(model.regularizer);
  if (model.norm_stats) {
    doc["norm_stats"] = {
        {"means", std::vector<double>(model.norm_stats->means.begin(),
                                      model.norm_stats->means.end())},
        {"stds", std::vector<double>(model.norm_stats->stds.begin(),
                                     model.norm_stats->stds.end())}};
  } else {
    doc["norm_stats"] = nullptr;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << doc.dump(2) << "\n";
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  nlohmann::json doc = nlohmann::json::parse(in);

  Model model;
  auto weights = doc.at("weights").get<std::vector<double>>();
  model.weights = Eigen::Map<const Vec>(weights.data(),
                                        static_cast<Index>(weights.size()));
  model.lambda = doc.at("lambda").get<double>();
  model.regularizer = regularizer_from_string(doc.at("regularizer").get<std::string>());
  if (!doc.at("norm_stats").is_null()) {
    auto means = doc["norm_stats"].at("means").get<std::vector<double>>();
    auto stds = doc["norm_stats"].at("stds").get<std::vector<double>>();
    if (means.size() != stds.size() || means.size() != weights.size()) {
      throw std::runtime_error(path.string() + ": inconsistent model dimensions");
    }
    NormStats stats;
    stats.means = Eigen::Map<const Vec>(means.data(), static_cast<Index>(means.size()));
    stats.stds = Eigen::Map<const Vec>(stds.data(), static_cast<Index>(stds.size()));
    model.norm_stats = std::move(stats);
  }
  return model;
}

namespace {

Mat take_rows(const Mat& src, const std::vector<Index>& order, Index from,
              Index to) {
  Mat out(to - from, src.cols());
  for (Index i = from; i < to; ++i) out.row(i - from) = src.row(order[static_cast<size_t>(i)]);
  return out;
}

std::vector<Index> shuffled_indices(Index count, Rng& rng) {
  std::vector<Index> order(static_cast<size_t>(count));
  std::iota(order.begin(), order.end(), Index{0});
  for (Index i = count - 1; i > 0; --i) {
    Index j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }
  return order;
}

}  // namespace

std::pair<Dataset, Dataset> stratified_split(const Dataset& data,
                                             double fraction,
                                             std::uint64_t seed) {
  data.validate();
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split fraction must lie strictly inside (0, 1)");
  }
  if (data.num_positives() < 2 || data.num_negatives() < 2) {
    throw std::invalid_argument("stratified split needs at least 2 examples per class");
  }
  Rng rng(seed);
  auto cut = [fraction](Index count) {
    Index k = static_cast<Index>(std::llround(fraction * static_cast<double>(count)));
    return std::clamp<Index>(k, 1, count - 1);
  };

  auto pos_order = shuffled_indices(data.num_positives(), rng);
  auto neg_order = shuffled_indices(data.num_negatives(), rng);
  Index pos_cut = cut(data.num_positives());
  Index neg_cut = cut(data.num_negatives());

  Dataset first, second;
  first.positives = take_rows(data.positives, pos_order, 0, pos_cut);
  first.negatives = take_rows(data.negatives, neg_order, 0, neg_cut);
  second.positives = take_rows(data.positives, pos_order, pos_cut, data.num_positives());
  second.negatives = take_rows(data.negatives, neg_order, neg_cut, data.num_negatives());
  first.feature_names = data.feature_names;
  second.feature_names = data.feature_names;
  return {std::move(first), std::move(second)};
}

}  // namespace infpush
