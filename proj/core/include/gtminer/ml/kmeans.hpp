#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtminer/matrix.hpp"

namespace gtminer::ml {

struct KMeansOptions {
  std::size_t k = 2;
  std::uint64_t seed = 42;
  std::size_t max_iter = 300;
  double tol = 1e-6;
};

struct KMeansResult {
  Matrix centroids;  // k x features
  std::vector<std::size_t> labels;
  double inertia = 0.0;
  std::size_t iterations = 0;  // Lloyd updates performed
  /// Inertia after the initial assignment and after every update.
  std::vector<double> inertia_history;
};

/// k-means++ seeding then Lloyd iterations on `points` as given (callers
/// standardize first when features have mixed units). Stops when no
/// centroid moves by `tol` or more. An emptied cluster is moved to the point
/// farthest from its centroid. Throws ParameterError unless 1 <= k <= rows.
KMeansResult kmeans(const Matrix& points, const KMeansOptions& options);

}  // namespace gtminer::ml
