#include "gtminer/ml/mlp.hpp"

#include <algorithm>
#include <cmath>

#include "gtminer/error.hpp"
#include "gtminer/random.hpp"

namespace gtminer::ml {
namespace {

double sigmoid(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// Cross-entropy from the logit, stable for large |z|.
double bce_from_logit(double z, double y) noexcept {
  return std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
}

struct Forward {
  std::vector<double> hidden;  // tanh activations
  double logit = 0.0;
};

Forward forward(const MlpParameters& p, std::span<const double> z) {
  Forward f;
  f.hidden.resize(p.b1.size());
  for (std::size_t h = 0; h < p.b1.size(); ++h)
    f.hidden[h] = std::tanh(dot(p.w1.row(h), z) + p.b1[h]);
  f.logit = dot(f.hidden, p.w2) + p.b2;
  return f;
}

void check_arity(const MlpModel& model, std::size_t features) {
  if (features != model.inputs())
    throw ParameterError("model expects " + std::to_string(model.inputs()) + " features, got " +
                         std::to_string(features));
}

}  // namespace

MlpParameters init_mlp(std::size_t inputs, std::size_t hidden, std::uint64_t seed) {
  Rng rng(seed);
  MlpParameters p;
  p.w1 = Matrix(hidden, inputs);
  const double l1 = std::sqrt(6.0 / static_cast<double>(inputs + hidden));
  for (std::size_t h = 0; h < hidden; ++h)
    for (std::size_t f = 0; f < inputs; ++f) p.w1(h, f) = rng.uniform(-l1, l1);
  p.b1.assign(hidden, 0.0);
  const double l2 = std::sqrt(6.0 / static_cast<double>(hidden + 1));
  p.w2.resize(hidden);
  for (auto& w : p.w2) w = rng.uniform(-l2, l2);
  p.b2 = 0.0;
  return p;
}

double mlp_forward(const MlpParameters& p, std::span<const double> z) {
  return sigmoid(forward(p, z).logit);
}

double mlp_loss(const MlpParameters& p, const Matrix& x, std::span<const double> y) {
  double total = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r) total += bce_from_logit(forward(p, x.row(r)).logit, y[r]);
  return total / static_cast<double>(x.rows());
}

MlpParameters mlp_gradient(const MlpParameters& p, const Matrix& x, std::span<const double> y) {
  const std::size_t H = p.b1.size();
  const std::size_t F = p.w1.cols();
  MlpParameters g;
  g.w1 = Matrix(H, F);
  g.b1.assign(H, 0.0);
  g.w2.assign(H, 0.0);
  g.b2 = 0.0;
  const double scale = 1.0 / static_cast<double>(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    const Forward f = forward(p, row);
    const double delta = (sigmoid(f.logit) - y[r]) * scale;  // dL/dlogit
    g.b2 += delta;
    for (std::size_t h = 0; h < H; ++h) {
      g.w2[h] += delta * f.hidden[h];
      const double dh = delta * p.w2[h] * (1.0 - f.hidden[h] * f.hidden[h]);
      g.b1[h] += dh;
      for (std::size_t c = 0; c < F; ++c) g.w1(h, c) += dh * row[c];
    }
  }
  return g;
}

double MlpModel::probability(std::span<const double> raw) const {
  const auto z = scaling.apply(raw);
  return mlp_forward(params, z);
}

MlpModel fit_mlp(const NumericTable& table, const MlpOptions& options) {
  if (table.rows() == 0) throw ParameterError("cannot train on an empty table");
  if (options.epochs == 0) throw ParameterError("number of epochs must be at least 1");
  if (!(options.learning_rate > 0.0)) throw ParameterError("learning rate must be positive");
  require_binary_dv(table, false);

  const std::size_t F = table.features.cols();
  const std::size_t H = options.hidden.value_or(std::max<std::size_t>(4, 2 * F));
  if (H == 0) throw ParameterError("hidden layer must have at least one unit");

  MlpModel model;
  auto [x, scaling] = standardize(table.features);
  model.scaling = std::move(scaling);
  model.params = init_mlp(F, H, options.seed);
  auto& p = model.params;
  const double lr = options.learning_rate;

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    const MlpParameters g = mlp_gradient(p, x, table.dv);
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t c = 0; c < F; ++c) p.w1(h, c) -= lr * g.w1(h, c);
      p.b1[h] -= lr * g.b1[h];
      p.w2[h] -= lr * g.w2[h];
    }
    p.b2 -= lr * g.b2;

    EpochMetrics m;
    std::size_t correct = 0;
    double loss = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      const double logit = forward(p, x.row(r)).logit;
      loss += bce_from_logit(logit, table.dv[r]);
      const int predicted = sigmoid(logit) >= 0.5 ? 1 : 0;
      if (predicted == static_cast<int>(table.dv[r])) ++correct;
    }
    m.loss = loss / static_cast<double>(x.rows());
    m.accuracy = static_cast<double>(correct) / static_cast<double>(x.rows());
    model.history.push_back(m);
  }
  return model;
}

Evaluation evaluate(const MlpModel& model, const NumericTable& test) {
  check_arity(model, test.features.cols());
  std::vector<int> predicted(test.rows());
  for (std::size_t r = 0; r < test.rows(); ++r) predicted[r] = model.predict(test.features.row(r));
  const auto cm = confusion_matrix(predicted, test.dv);
  return {cm.accuracy(), cm};
}

}  // namespace gtminer::ml
