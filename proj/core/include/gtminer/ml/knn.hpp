#pragma once

#include <cstddef>
#include <vector>

#include "gtminer/corpus.hpp"

namespace gtminer::ml {

struct Neighbor {
  std::size_t row = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// The `n` rows nearest to row `r` by Euclidean distance over z-scored
/// features, sorted by (distance, row). Row `r` itself is excluded. Throws
/// ParameterError unless r < rows and 1 <= n <= rows - 1.
std::vector<Neighbor> knn_neighbors(const NumericTable& table, std::size_t r, std::size_t n);

}  // namespace gtminer::ml
