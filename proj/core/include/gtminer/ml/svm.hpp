#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/matrix.hpp"
#include "gtminer/ml/preprocess.hpp"

namespace gtminer::ml {

struct SvmOptions {
  std::size_t epochs = 1000;
  double lambda = 1e-3;
  std::uint64_t seed = 42;
};

struct SvmModel {
  std::vector<double> weights;  // in standardized feature space
  double bias = 0.0;
  Standardization scaling;

  std::size_t inputs() const noexcept { return weights.size(); }
  /// w . z + b for a raw feature row.
  double decision(std::span<const double> raw) const;
  int predict(std::span<const double> raw) const { return decision(raw) >= 0.0 ? 1 : 0; }
};

/// lambda/2 |w|^2 + mean hinge loss, labels y in {-1, +1}. The bias is not
/// regularized.
double svm_objective(std::span<const double> w, double b, const Matrix& x,
                     std::span<const double> y, double lambda);

struct SvmGradient {
  std::vector<double> w;
  double b = 0.0;
};

/// Subgradient of svm_objective (exact away from hinge kinks).
SvmGradient svm_subgradient(std::span<const double> w, double b, const Matrix& x,
                            std::span<const double> y, double lambda);

/// Pegasos-style stochastic subgradient descent with step 1/(lambda t) over
/// a fresh seeded row permutation each epoch. dv must be {0, 1} with both
/// classes present; 0 maps to -1.
SvmModel fit_linear_svm(const NumericTable& table, const SvmOptions& options = {});

Evaluation evaluate(const SvmModel& model, const NumericTable& test);

}  // namespace gtminer::ml
