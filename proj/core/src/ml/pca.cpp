#include "gtminer/ml/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtminer/error.hpp"

namespace gtminer::ml {
namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tol, std::size_t max_sweeps) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw ParameterError("eigendecomposition needs a square matrix");
  Matrix a = symmetric;
  Matrix v = Matrix::identity(n);
  EigenDecomposition out;

  while (out.sweeps < max_sweeps && off_diagonal_norm(a) >= tol) {
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

PcaResult pca(const Matrix& features, std::size_t factors) {
  const std::size_t rows = features.rows();
  const std::size_t f = features.cols();
  if (rows < 2) throw ParameterError("PCA needs at least 2 rows");
  if (factors == 0 || factors > std::min(rows, f))
    throw ParameterError("number of factors must be between 1 and " +
                         std::to_string(std::min(rows, f)));

  PcaResult result;
  auto [z, scaling] = standardize(features);
  result.scaling = std::move(scaling);

  Matrix cov(f, f);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = i; j < f; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += z(r, i) * z(r, j);
      cov(i, j) = cov(j, i) = s / static_cast<double>(rows);
    }
  for (std::size_t i = 0; i < f; ++i) result.total_variance += cov(i, i);

  const auto eig = jacobi_eigen(cov);
  result.components = Matrix(factors, f);
  for (std::size_t c = 0; c < factors; ++c) {
    std::size_t lead = 0;
    for (std::size_t k = 1; k < f; ++k)
      if (std::abs(eig.vectors(k, c)) > std::abs(eig.vectors(lead, c))) lead = k;
    const double flip = eig.vectors(lead, c) < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < f; ++k) result.components(c, k) = flip * eig.vectors(k, c);
    result.explained_variance.push_back(eig.values[c]);
  }
  result.scores = z * result.components.transposed();
  return result;
}

}  // namespace gtminer::ml
