#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/matrix.hpp"
#include "gtminer/ml/preprocess.hpp"

namespace gtminer::ml {

struct MlpOptions {
  std::size_t epochs = 100;
  std::uint64_t seed = 42;
  double learning_rate = 0.1;
  std::optional<std::size_t> hidden;  // default max(4, 2 * features)
};

struct EpochMetrics {
  double accuracy = 0.0;  // training accuracy at threshold 0.5
  double loss = 0.0;      // mean binary cross-entropy
};

/// Parameters of a one-hidden-layer network F -> H -> 1 (tanh hidden,
/// logistic output). The same struct holds gradients.
struct MlpParameters {
  Matrix w1;               // H x F
  std::vector<double> b1;  // H
  std::vector<double> w2;  // H
  double b2 = 0.0;
};

struct MlpModel {
  MlpParameters params;
  Standardization scaling;  // fitted on the training features
  std::vector<EpochMetrics> history;

  std::size_t inputs() const noexcept { return params.w1.cols(); }
  std::size_t hidden() const noexcept { return params.w1.rows(); }

  /// P(class 1) for a raw (unstandardized) feature row.
  double probability(std::span<const double> raw) const;
  int predict(std::span<const double> raw) const { return probability(raw) >= 0.5 ? 1 : 0; }
};

/// Xavier-uniform weights, zero biases.
MlpParameters init_mlp(std::size_t inputs, std::size_t hidden, std::uint64_t seed);

/// Output probability for an already standardized row.
double mlp_forward(const MlpParameters& p, std::span<const double> z);

/// Mean binary cross-entropy over standardized rows `x` with labels `y`.
double mlp_loss(const MlpParameters& p, const Matrix& x, std::span<const double> y);

/// Analytic gradient of mlp_loss.
MlpParameters mlp_gradient(const MlpParameters& p, const Matrix& x, std::span<const double> y);

/// Full-batch gradient descent; metrics recorded after each update.
/// Throws ParameterError unless dv is in {0, 1}, epochs >= 1 and the table
/// has rows.
MlpModel fit_mlp(const NumericTable& table, const MlpOptions& options);

/// Throws ParameterError when the feature count differs from the model's.
Evaluation evaluate(const MlpModel& model, const NumericTable& test);

}  // namespace gtminer::ml
