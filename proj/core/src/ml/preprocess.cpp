#include "gtminer/ml/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtminer/error.hpp"
#include "gtminer/random.hpp"

namespace gtminer::ml {

Standardization fit_standardization(const Matrix& x) {
  if (x.rows() == 0) throw ParameterError("cannot standardize a matrix without rows");
  Standardization s;
  s.means.resize(x.cols());
  s.stds.resize(x.cols());
  const auto n = static_cast<double>(x.rows());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    const double first = x(0, c);
    bool constant = true;
    double sum = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      sum += x(r, c);
      constant = constant && x(r, c) == first;
    }
    if (constant) {
      s.means[c] = first;
      s.stds[c] = 1.0;
      continue;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) ss += (x(r, c) - mean) * (x(r, c) - mean);
    const double sd = std::sqrt(ss / n);
    s.means[c] = mean;
    s.stds[c] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

Matrix Standardization::apply(const Matrix& x) const {
  Matrix z(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) z(r, c) = (x(r, c) - means[c]) / stds[c];
  return z;
}

std::vector<double> Standardization::apply(std::span<const double> row) const {
  std::vector<double> z(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) z[c] = (row[c] - means[c]) / stds[c];
  return z;
}

Matrix Standardization::invert(const Matrix& z) const {
  Matrix x(z.rows(), z.cols());
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) x(r, c) = z(r, c) * stds[c] + means[c];
  return x;
}

std::pair<Matrix, Standardization> standardize(const Matrix& x) {
  auto s = fit_standardization(x);
  return {s.apply(x), std::move(s)};
}

Split train_test_split(const NumericTable& table, const SplitSpec& spec) {
  const std::size_t n = table.rows();
  if (n < 5) throw ParameterError("train/test split needs at least 5 rows, got " + std::to_string(n));
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw ParameterError("test fraction must lie strictly between 0 and 1");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  shuffle(std::span(order), rng);

  // The small slack keeps e.g. 0.1 * 30 from rounding up to 4.
  auto test_n = static_cast<std::size_t>(std::ceil(spec.test_fraction * static_cast<double>(n) - 1e-9));
  test_n = std::clamp<std::size_t>(test_n, 1, n - 1);

  Split split;
  split.train_rows.assign(order.begin(), order.end() - static_cast<std::ptrdiff_t>(test_n));
  split.test_rows.assign(order.end() - static_cast<std::ptrdiff_t>(test_n), order.end());
  split.train = table.select_rows(split.train_rows);
  split.test = table.select_rows(split.test_rows);
  return split;
}

void require_binary_dv(const NumericTable& table, bool both_classes) {
  std::size_t ones = 0;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const double y = table.dv[r];
    if (y != 0.0 && y != 1.0)
      throw ParameterError("dependent variable '" + table.dv_name + "' must be 0 or 1 (row " +
                           std::to_string(r) + " has " + std::to_string(y) + ")");
    if (y == 1.0) ++ones;
  }
  if (both_classes && (ones == 0 || ones == table.rows()))
    throw ParameterError("dependent variable '" + table.dv_name + "' has a single class");
}

NumericTable oversample(const NumericTable& table, std::uint64_t seed) {
  require_binary_dv(table, true);
  std::vector<std::size_t> zeros, ones;
  for (std::size_t r = 0; r < table.rows(); ++r) (table.dv[r] == 1.0 ? ones : zeros).push_back(r);
  const auto& minority = ones.size() < zeros.size() ? ones : zeros;
  const std::size_t deficit = std::max(ones.size(), zeros.size()) - minority.size();

  std::vector<std::size_t> rows(table.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < deficit; ++i)
    rows.push_back(minority[static_cast<std::size_t>(rng.below(minority.size()))]);
  return table.select_rows(rows);
}

double ConfusionMatrix::accuracy() const noexcept {
  const std::size_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(n);
}

ConfusionMatrix confusion_matrix(std::span<const int> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size())
    throw ParameterError("prediction and label counts differ");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool p = predicted[i] == 1;
    const bool a = actual[i] == 1.0;
    if (p && a) ++m.tp;
    else if (p) ++m.fp;
    else if (a) ++m.fn;
    else ++m.tn;
  }
  return m;
}

}  // namespace gtminer::ml
