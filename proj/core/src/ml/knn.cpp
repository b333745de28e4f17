#include "gtminer/ml/knn.hpp"

#include <algorithm>
#include <cmath>

#include "gtminer/error.hpp"
#include "gtminer/ml/preprocess.hpp"

namespace gtminer::ml {

std::vector<Neighbor> knn_neighbors(const NumericTable& table, std::size_t r, std::size_t n) {
  const std::size_t rows = table.rows();
  if (r >= rows)
    throw ParameterError("record " + std::to_string(r) + " out of range (table has " +
                         std::to_string(rows) + " rows)");
  if (n == 0 || n + 1 > rows)
    throw ParameterError("number of neighbours must be between 1 and " +
                         std::to_string(rows == 0 ? 0 : rows - 1));
  const auto [z, scaling] = standardize(table.features);
  std::vector<Neighbor> all;
  all.reserve(rows - 1);
  for (std::size_t i = 0; i < rows; ++i)
    if (i != r) all.push_back({i, std::sqrt(squared_distance(z.row(r), z.row(i)))});
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n), all.end(),
                    [](const Neighbor& a, const Neighbor& b) {
                      return a.distance != b.distance ? a.distance < b.distance : a.row < b.row;
                    });
  all.resize(n);
  return all;
}

}  // namespace gtminer::ml
