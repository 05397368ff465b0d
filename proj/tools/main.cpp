#include "infpush/admm.hpp"
#include "infpush/data.hpp"
#include "infpush/metrics.hpp"
#include "infpush/tune.hpp"
#include "infpush/types.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

namespace {

using infpush::Dataset;
using infpush::Model;
using infpush::RankScores;
using infpush::Regularizer;
using infpush::SolverConfig;
using infpush::Vec;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

int env_threads() {
  const char* raw = std::getenv("INFPUSH_THREADS");
  if (!raw) return 0;
  return std::max(0, std::atoi(raw));
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

json report_json(double lambda, const infpush::FitReport& report) {
  json doc;
  doc["lambda"] = lambda;
  doc["objective"] = report.objective_trace.empty() ? 0.0 : report.objective_trace.back();
  doc["residual"] = report.primal_residual_trace.empty()
                        ? 0.0
                        : report.primal_residual_trace.back();
  doc["iterations"] = report.iterations;
  doc["nonzeros"] = report.nonzero_count;
  doc["converged"] = report.converged;
  doc["metrics"] = json::object();
  return doc;
}

void write_report(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

struct TrainArgs {
  std::string data_path, out_path, report_path;
  std::string reg = "l2";
  double lambda = 1.0;
  double mu = 1.0;
  double outer_tol = 1e-5;
  int max_iter = 500;
};

int run_train(const TrainArgs& args) {
  Dataset raw = infpush::load_csv(args.data_path);
  infpush::NormStats stats = infpush::fit_normalizer(raw);
  Dataset normalized = infpush::apply_normalizer(stats, raw);

  SolverConfig cfg;
  cfg.mu = args.mu;
  cfg.outer_tol = args.outer_tol;
  cfg.outer_max_iter = args.max_iter;

  auto [model, report] = infpush::fit(
      normalized, args.lambda, infpush::regularizer_from_string(args.reg), cfg);
  model.norm_stats = stats;
  infpush::save_model(args.out_path, model);

  std::printf("trained: iterations=%d objective=%.6g residual=%.3g nonzeros=%d converged=%s\n",
              report.iterations,
              report.objective_trace.empty() ? 0.0 : report.objective_trace.back(),
              report.primal_residual_trace.empty() ? 0.0 : report.primal_residual_trace.back(),
              report.nonzero_count, report.converged ? "yes" : "no");
  write_report(args.report_path, report_json(args.lambda, report));
  return kExitOk;
}

struct EvalArgs {
  std::string model_path, data_path, relevant, report_path;
};

int run_eval(const EvalArgs& args) {
  Model model = infpush::load_model(args.model_path);
  Dataset data = infpush::load_csv(args.data_path);

  RankScores scores{infpush::predict_all(model, data.positives),
                    infpush::predict_all(model, data.negatives)};
  int loss = infpush::infinite_push_loss(scores);
  double rate = infpush::pos_at_top_rate(scores);
  auto selected = infpush::selected_features(model.weights);

  std::printf("infinite_push_loss=%d pos_at_top_rate=%.6g nonzeros=%zu\n",
              loss, rate, selected.size());

  json doc;
  doc["metrics"] = {{"infinite_push_loss", loss},
                    {"pos_at_top_rate", rate},
                    {"nonzeros", selected.size()}};
  if (!args.relevant.empty()) {
    auto relevant = parse_int_list(args.relevant);
    auto fm = infpush::feature_metrics(selected, relevant);
    std::printf("precision=%.6g recall=%.6g f_measure=%.6g\n", fm.precision,
                fm.recall, fm.f_measure);
    doc["metrics"]["precision"] = fm.precision;
    doc["metrics"]["recall"] = fm.recall;
    doc["metrics"]["f_measure"] = fm.f_measure;
  }
  write_report(args.report_path, doc);
  return kExitOk;
}

struct PredictArgs {
  std::string model_path, data_path, out_path;
};

int run_predict(const PredictArgs& args) {
  Model model = infpush::load_model(args.model_path);
  Dataset data = infpush::load_csv(args.data_path);
  Vec pos = infpush::predict_all(model, data.positives);
  Vec neg = infpush::predict_all(model, data.negatives);

  std::FILE* out = args.out_path.empty() ? stdout : std::fopen(args.out_path.c_str(), "w");
  if (!out) throw std::runtime_error("cannot write '" + args.out_path + "'");
  for (infpush::Index i = 0; i < pos.size(); ++i) {
    std::fprintf(out, "1,%.17g\n", pos[i]);
  }
  for (infpush::Index i = 0; i < neg.size(); ++i) {
    std::fprintf(out, "-1,%.17g\n", neg[i]);
  }
  if (out != stdout) std::fclose(out);
  return kExitOk;
}

struct TuneArgs {
  std::string data_path, grid, out_path, report_path;
  std::string reg = "l1";
  std::string metric = "pos_at_top";
  double split = 0.7;
  std::uint64_t seed = 0;
};

int run_tune(const TuneArgs& args) {
  Dataset data = infpush::load_csv(args.data_path);

  infpush::TuneGrid grid;
  grid.lambdas = parse_double_list(args.grid);
  grid.split_fraction = args.split;
  grid.seed = args.seed;
  if (args.metric == "pos_at_top") {
    grid.metric = infpush::TuneMetric::PosAtTop;
  } else if (args.metric == "neg_infpush_loss") {
    grid.metric = infpush::TuneMetric::NegInfPushLoss;
  } else {
    throw CLI::ValidationError("--metric",
                               "expected pos_at_top or neg_infpush_loss");
  }

  SolverConfig cfg;
  auto result = infpush::tune_lambda(
      data, infpush::regularizer_from_string(args.reg), grid, cfg, env_threads());
  infpush::save_model(args.out_path, result.model);

  std::printf("tuned: lambda=%.6g nonzeros=%d\n", result.best_lambda,
              result.report.nonzero_count);
  for (size_t i = 0; i < grid.lambdas.size(); ++i) {
    std::printf("  lambda=%.6g score=%.6g\n", grid.lambdas[i], result.scores[i]);
  }
  json doc = report_json(result.best_lambda, result.report);
  doc["grid"] = grid.lambdas;
  doc["scores"] = result.scores;
  write_report(args.report_path, doc);
  return kExitOk;
}

struct SynthArgs {
  std::string out_path;
  int d = 20, r = 10, n = 100;
  std::uint64_t seed = 0;
};

int run_synth(const SynthArgs& args) {
  infpush::ToySpec spec;
  spec.d = args.d;
  spec.r = args.r;
  spec.n_samples = args.n;
  spec.seed = args.seed;
  auto [data, relevant] = infpush::generate_toy(spec);
  infpush::save_csv(args.out_path, data);

  std::ofstream side(args.out_path + ".relevant");
  if (!side) throw std::runtime_error("cannot write sidecar for '" + args.out_path + "'");
  for (size_t i = 0; i < relevant.size(); ++i) {
    side << relevant[i] << (i + 1 < relevant.size() ? "," : "\n");
  }
  std::printf("wrote %d samples to %s (relevant indices in %s.relevant)\n",
              args.n, args.out_path.c_str(), args.out_path.c_str());
  return kExitOk;
}

struct BenchArgs {
  std::string sizes;
  int d = 30, r = 10, trials = 3;
  std::uint64_t seed = 0;
  double lambda = 0.1;
  std::string reg = "l1";
};

int run_bench(const BenchArgs& args) {
  auto sizes = parse_int_list(args.sizes);
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "needs at least one size");

  SolverConfig cfg;
  cfg.outer_tol = 1e-4;
  cfg.outer_max_iter = 100;
  Regularizer reg = infpush::regularizer_from_string(args.reg);

  std::vector<double> log_mn, log_time;
  std::printf("%10s %12s %14s\n", "size", "pairs", "seconds");
  for (size_t idx = 0; idx < sizes.size(); ++idx) {
    int size = sizes[idx];
    double elapsed = 0.0;
    long pairs = 0;
    for (int trial = 0; trial < args.trials; ++trial) {
      infpush::ToySpec spec;
      spec.d = args.d;
      spec.r = args.r;
      spec.n_samples = size;
      spec.seed = args.seed + 1000 * static_cast<std::uint64_t>(idx) +
                  static_cast<std::uint64_t>(trial);
      auto [data, relevant] = infpush::generate_toy(spec);
      Dataset normalized = infpush::apply_normalizer(infpush::fit_normalizer(data), data);
      pairs = static_cast<long>(data.num_positives()) * data.num_negatives();

      auto start = std::chrono::steady_clock::now();
      auto fitted = infpush::fit(normalized, args.lambda, reg, cfg);
      auto stop = std::chrono::steady_clock::now();
      elapsed += std::chrono::duration<double>(stop - start).count();
    }
    elapsed /= args.trials;
    std::printf("%10d %12ld %14.4f\n", size, pairs, elapsed);
    log_mn.push_back(std::log(static_cast<double>(pairs)));
    log_time.push_back(std::log(std::max(elapsed, 1e-9)));
  }

  // least-squares slope of log(time) against log(pairs)
  double n = static_cast<double>(log_mn.size());
  double mean_x = std::accumulate(log_mn.begin(), log_mn.end(), 0.0) / n;
  double mean_y = std::accumulate(log_time.begin(), log_time.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < log_mn.size(); ++i) {
    sxx += (log_mn[i] - mean_x) * (log_mn[i] - mean_x);
    sxy += (log_mn[i] - mean_x) * (log_time[i] - mean_y);
  }
  double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  std::printf("empirical complexity exponent p = %.2f\n", slope);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse infinite-push ranking: train, evaluate and benchmark "
               "linear scoring functions"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "fit a model on a CSV dataset");
  train->add_option("--data", train_args.data_path, "training CSV")->required();
  train->add_option("--lambda", train_args.lambda, "regularization strength")
      ->required()
      ->check(CLI::PositiveNumber);
  train->add_option("--reg", train_args.reg, "regularizer (l1 or l2)")
      ->check(CLI::IsMember({"l1", "l2"}));
  train->add_option("--out", train_args.out_path, "model output path")->required();
  train->add_option("--mu", train_args.mu, "penalty parameter")
      ->check(CLI::PositiveNumber);
  train->add_option("--outer-tol", train_args.outer_tol, "outer tolerance")
      ->check(CLI::PositiveNumber);
  train->add_option("--max-iter", train_args.max_iter, "outer iteration cap")
      ->check(CLI::PositiveNumber);
  train->add_option("--report", train_args.report_path, "JSON report path");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "score a model on a CSV dataset");
  eval->add_option("--model", eval_args.model_path)->required();
  eval->add_option("--data", eval_args.data_path)->required();
  eval->add_option("--relevant", eval_args.relevant,
                   "comma list of ground-truth feature indices");
  eval->add_option("--report", eval_args.report_path, "JSON report path");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "print label,score lines");
  predict->add_option("--model", predict_args.model_path)->required();
  predict->add_option("--data", predict_args.data_path)->required();
  predict->add_option("--out", predict_args.out_path, "output path (default stdout)");

  TuneArgs tune_args;
  auto* tune = app.add_subcommand("tune", "grid-search lambda on a validation split");
  tune->add_option("--data", tune_args.data_path)->required();
  tune->add_option("--grid", tune_args.grid, "comma list of lambda values")->required();
  tune->add_option("--reg", tune_args.reg)->check(CLI::IsMember({"l1", "l2"}));
  tune->add_option("--seed", tune_args.seed, "split seed");
  tune->add_option("--split", tune_args.split, "train fraction (default 0.7)");
  tune->add_option("--metric", tune_args.metric,
                   "pos_at_top or neg_infpush_loss");
  tune->add_option("--out", tune_args.out_path, "model output path")->required();
  tune->add_option("--report", tune_args.report_path, "JSON report path");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "generate a toy CSV dataset");
  synth->add_option("--d", synth_args.d, "feature count")->required();
  synth->add_option("--r", synth_args.r, "relevant feature count")->required();
  synth->add_option("--n", synth_args.n, "sample count")->required();
  synth->add_option("--seed", synth_args.seed);
  synth->add_option("--out", synth_args.out_path, "CSV output path")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time fits across training sizes");
  bench->add_option("--sizes", bench_args.sizes, "comma list of training sizes")->required();
  bench->add_option("--d", bench_args.d, "feature count");
  bench->add_option("--r", bench_args.r, "relevant feature count");
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--trials", bench_args.trials)->check(CLI::PositiveNumber);
  bench->add_option("--lambda", bench_args.lambda)->check(CLI::PositiveNumber);
  bench->add_option("--reg", bench_args.reg)->check(CLI::IsMember({"l1", "l2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (train->parsed()) return run_train(train_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (predict->parsed()) return run_predict(predict_args);
    if (tune->parsed()) return run_tune(tune_args);
    if (synth->parsed()) return run_synth(synth_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
