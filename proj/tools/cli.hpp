#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gtminer::cli {

enum class Action {
  Cat,
  Codedict,
  Topics,
  Assign,
  Sentiment,
  Sentence,
  Summary,
  Concepts,
  Nnet,
  Svm,
  Kmeans,
  Knn,
  Pca,
};

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInput = 3,
  kParameter = 4,
};

struct Config {
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::optional<std::string> csv;
  std::optional<long long> n;
  std::optional<long long> rec;
  std::vector<std::string> titles;
  std::vector<std::string> filters;
  std::set<Action> actions;  // run in enum order
  bool oversample = false;
  std::uint64_t seed = 42;

  // Hyperparameters.
  std::size_t lda_iterations = 500;
  std::optional<double> alpha;
  double beta = 0.01;
  std::size_t terms = 10;
  double learning_rate = 0.1;
  double lambda = 1e-3;
  std::size_t svm_epochs = 1000;
  double test_fraction = 0.2;
  std::size_t properties = 5;
  std::size_t dimensions = 5;
};

/// Parses arguments (without the program name). `env_seed` is the value of
/// GTMINER_SEED, if set. Throws UsageError; `--help` yields HelpRequested.
Config parse_args(const std::vector<std::string>& args, const char* env_seed);

struct HelpRequested {
  std::string text;
};

std::string help_text();

/// Runs every requested action and returns the rendered report. Throws the
/// library's error types.
std::string run(const Config& config);

struct Outcome {
  int exit_code = kSuccess;
  std::string out;  // for stdout (empty when written to -o)
  std::string err;  // for stderr
};

/// parse_args + run + writing the -o file, with errors mapped to exit codes.
Outcome execute(const std::vector<std::string>& args, const char* env_seed);

}  // namespace gtminer::cli
