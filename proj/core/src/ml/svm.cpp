#include "gtminer/ml/svm.hpp"

#include <numeric>

#include "gtminer/error.hpp"
#include "gtminer/random.hpp"

namespace gtminer::ml {

double SvmModel::decision(std::span<const double> raw) const {
  const auto z = scaling.apply(raw);
  return dot(weights, z) + bias;
}

double svm_objective(std::span<const double> w, double b, const Matrix& x,
                     std::span<const double> y, double lambda) {
  double hinge = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r)
    hinge += std::max(0.0, 1.0 - y[r] * (dot(w, x.row(r)) + b));
  return 0.5 * lambda * dot(w, w) + hinge / static_cast<double>(x.rows());
}

SvmGradient svm_subgradient(std::span<const double> w, double b, const Matrix& x,
                            std::span<const double> y, double lambda) {
  SvmGradient g;
  g.w.assign(w.begin(), w.end());
  for (auto& v : g.w) v *= lambda;
  const double scale = 1.0 / static_cast<double>(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    if (y[r] * (dot(w, row) + b) < 1.0) {
      for (std::size_t c = 0; c < w.size(); ++c) g.w[c] -= scale * y[r] * row[c];
      g.b -= scale * y[r];
    }
  }
  return g;
}

SvmModel fit_linear_svm(const NumericTable& table, const SvmOptions& options) {
  require_binary_dv(table, true);
  if (options.epochs == 0) throw ParameterError("number of SVM epochs must be at least 1");
  if (!(options.lambda > 0.0)) throw ParameterError("lambda must be positive");

  SvmModel model;
  auto [x, scaling] = standardize(table.features);
  model.scaling = std::move(scaling);
  const std::size_t n = x.rows();
  const std::size_t f = x.cols();
  std::vector<double> y(n);
  for (std::size_t r = 0; r < n; ++r) y[r] = table.dv[r] == 1.0 ? 1.0 : -1.0;

  auto& w = model.weights;
  w.assign(f, 0.0);
  double& b = model.bias;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    shuffle(std::span(order), rng);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (options.lambda * static_cast<double>(t));
      const auto row = x.row(i);
      const bool violated = y[i] * (dot(w, row) + b) < 1.0;
      for (auto& v : w) v *= 1.0 - eta * options.lambda;
      if (violated) {
        for (std::size_t c = 0; c < f; ++c) w[c] += eta * y[i] * row[c];
        b += eta * y[i];
      }
    }
  }
  return model;
}

Evaluation evaluate(const SvmModel& model, const NumericTable& test) {
  if (test.features.cols() != model.inputs())
    throw ParameterError("model expects " + std::to_string(model.inputs()) + " features, got " +
                         std::to_string(test.features.cols()));
  std::vector<int> predicted(test.rows());
  for (std::size_t r = 0; r < test.rows(); ++r) predicted[r] = model.predict(test.features.row(r));
  const auto cm = confusion_matrix(predicted, test.dv);
  return {cm.accuracy(), cm};
}

}  // namespace gtminer::ml
