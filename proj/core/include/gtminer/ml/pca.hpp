#pragma once

#include <cstddef>
#include <vector>

#include "gtminer/matrix.hpp"
#include "gtminer/ml/preprocess.hpp"

namespace gtminer::ml {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column j pairs with values[j]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix until the off-diagonal
/// Frobenius norm drops below `tol`. Throws ParameterError for a
/// non-square input.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tol = 1e-12,
                                std::size_t max_sweeps = 100);

struct PcaResult {
  Matrix components;                    // factors x features, orthonormal rows
  std::vector<double> explained_variance;  // eigenvalues, non-increasing
  double total_variance = 0.0;          // trace of the correlation matrix
  Matrix scores;                        // rows x factors
  Standardization scaling;

  double explained_ratio(std::size_t factor) const noexcept {
    return total_variance > 0.0 ? explained_variance[factor] / total_variance : 0.0;
  }
};

/// PCA of the standardized features (the correlation-matrix variant). Each
/// component's largest-magnitude loading is made positive. Throws
/// ParameterError unless rows >= 2 and 1 <= factors <= min(rows, features).
PcaResult pca(const Matrix& features, std::size_t factors);

}  // namespace gtminer::ml
