#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/matrix.hpp"

namespace gtminer::ml {

/// Per-column z-score parameters. Constant columns get std 1, so they are
/// only centred.
struct Standardization {
  std::vector<double> means;
  std::vector<double> stds;

  Matrix apply(const Matrix& x) const;
  std::vector<double> apply(std::span<const double> row) const;
  Matrix invert(const Matrix& z) const;
};

/// Population mean and standard deviation per column. Throws ParameterError
/// for a matrix without rows.
Standardization fit_standardization(const Matrix& x);

std::pair<Matrix, Standardization> standardize(const Matrix& x);

struct SplitSpec {
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
};

struct Split {
  NumericTable train;
  NumericTable test;
  std::vector<std::size_t> train_rows;  // indices into the input table
  std::vector<std::size_t> test_rows;
};

/// Seeded shuffle; the last ceil(test_fraction * N) shuffled rows form the
/// test part. Throws ParameterError for fewer than 5 rows or a fraction
/// outside (0, 1).
Split train_test_split(const NumericTable& table, const SplitSpec& spec = {});

/// Appends minority-class rows drawn with replacement until both classes
/// have equal counts. Throws ParameterError unless dv is binary with both
/// classes present.
NumericTable oversample(const NumericTable& table, std::uint64_t seed);

/// Throws ParameterError unless every dv value is exactly 0 or 1 (and, when
/// `both_classes`, each occurs).
void require_binary_dv(const NumericTable& table, bool both_classes);

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  double accuracy() const noexcept;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Positive class is 1.
ConfusionMatrix confusion_matrix(std::span<const int> predicted, std::span<const double> actual);

struct Evaluation {
  double accuracy = 0.0;
  ConfusionMatrix confusion;
};

}  // namespace gtminer::ml
