#include "gtminer/ml/kmeans.hpp"

#include <cmath>
#include <limits>

#include "gtminer/error.hpp"
#include "gtminer/random.hpp"

namespace gtminer::ml {
namespace {

/// Assigns every point to its nearest centroid (lowest index on ties) and
/// returns the inertia.
double assign(const Matrix& x, const Matrix& centroids, std::vector<std::size_t>& labels) {
  double inertia = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    std::size_t best = 0;
    double best_d = squared_distance(x.row(r), centroids.row(0));
    for (std::size_t c = 1; c < centroids.rows(); ++c) {
      const double d = squared_distance(x.row(r), centroids.row(c));
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    labels[r] = best;
    inertia += best_d;
  }
  return inertia;
}

Matrix seed_centroids(const Matrix& x, std::size_t k, Rng& rng) {
  const std::size_t n = x.rows();
  Matrix centroids(k, x.cols());
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::size_t pick = static_cast<std::size_t>(rng.below(n));
  for (std::size_t c = 0;; ++c) {
    for (std::size_t j = 0; j < x.cols(); ++j) centroids(c, j) = x(pick, j);
    if (c + 1 == k) break;
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      d2[r] = std::min(d2[r], squared_distance(x.row(r), centroids.row(c)));
      total += d2[r];
    }
    if (total > 0.0) {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (std::size_t r = 0; r < n; ++r) {
        acc += d2[r];
        if (acc > u && d2[r] > 0.0) {
          pick = r;
          break;
        }
      }
    } else {
      pick = static_cast<std::size_t>(rng.below(n));
    }
  }
  return centroids;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, const KMeansOptions& options) {
  const std::size_t n = points.rows();
  const std::size_t k = options.k;
  if (k == 0) throw ParameterError("number of clusters must be at least 1");
  if (k > n)
    throw ParameterError("number of clusters (" + std::to_string(k) + ") exceeds rows (" +
                         std::to_string(n) + ")");

  Rng rng(options.seed);
  KMeansResult result;
  result.centroids = seed_centroids(points, k, rng);
  result.labels.assign(n, 0);
  result.inertia = assign(points, result.centroids, result.labels);
  result.inertia_history.push_back(result.inertia);

  const std::size_t f = points.cols();
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    Matrix next(k, f);
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t r = 0; r < n; ++r) {
      ++sizes[result.labels[r]];
      for (std::size_t j = 0; j < f; ++j) next(result.labels[r], j) += points(r, j);
    }

    // Distances to the current centroids, for reseeding empty clusters.
    std::vector<double> own(n);
    for (std::size_t r = 0; r < n; ++r)
      own[r] = squared_distance(points.row(r), result.centroids.row(result.labels[r]));
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) {
        for (std::size_t j = 0; j < f; ++j) next(c, j) /= static_cast<double>(sizes[c]);
        continue;
      }
      std::size_t far = 0;
      for (std::size_t r = 1; r < n; ++r)
        if (own[r] > own[far]) far = r;
      for (std::size_t j = 0; j < f; ++j) next(c, j) = points(far, j);
      own[far] = -1.0;
    }

    double shift = 0.0;
    for (std::size_t c = 0; c < k; ++c)
      shift = std::max(shift, std::sqrt(squared_distance(next.row(c), result.centroids.row(c))));
    result.centroids = std::move(next);
    result.inertia = assign(points, result.centroids, result.labels);
    result.inertia_history.push_back(result.inertia);
    result.iterations = iter;
    if (shift < options.tol) break;
  }
  return result;
}

}  // namespace gtminer::ml
