// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/svm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wavecloud/rng.hpp"

namespace wavecloud {

double SvmModel::decision(std::span<const double> v) const {
  if (v.size() != weights.size()) {
    throw std::invalid_argument("svm_predict: vector has dimension " + std::to_string(v.size()) +
                                ", model expects " + std::to_string(weights.size()));
  }
  double s = bias;
  for (std::size_t i = 0; i < v.size(); ++i) s += weights[i] * v[i];
  return s;
}

int svm_predict(const SvmModel& m, std::span<const double> v) {
  return m.decision(v) >= 0.0 ? 1 : -1;
}

double svm_objective(const SvmModel& m, const LabeledDataset& data) {
  double norm_sq = 0.0;
  for (double w : m.weights) norm_sq += w * w;
  double hinge = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double margin = data.labels[i] * m.decision(data.vectors[i].values);
    hinge += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * m.lambda * norm_sq + hinge / static_cast<double>(data.size());
}

SvmTraining svm_train_with_history(const LabeledDataset& data, const SvmConfig& cfg) {
  data.validate("svm_train", /*allow_negative=*/true);
  if (data.empty()) throw std::invalid_argument("svm_train: empty dataset");
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("svm_train: lambda must be positive");
  if (cfg.epochs == 0) throw std::invalid_argument("svm_train: epochs must be >= 1");
  bool has_pos = false;
  bool has_neg = false;
  for (int y : data.labels) {
    if (y == 1) {
      has_pos = true;
    } else if (y == -1) {
      has_neg = true;
    } else {
      throw std::invalid_argument("svm_train: labels must be -1 or +1, got " + std::to_string(y));
    }
  }
  if (!has_pos || !has_neg) throw std::invalid_argument("svm_train: data contains a single class");

  const std::size_t dim = data.dimension();
  double mean_norm_sq = 0.0;
  for (const auto& v : data.vectors)
    for (double x : v.values) mean_norm_sq += x * x;
  mean_norm_sq /= static_cast<double>(data.size());
  const double bias_gain = mean_norm_sq > 0.0 ? mean_norm_sq : 1.0;

  SvmTraining out;
  out.model.weights.assign(dim, 0.0);
  out.model.lambda = cfg.lambda;
  out.initial_objective = svm_objective(out.model, data);

  Rng rng(cfg.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto& w = out.model.weights;
  SvmModel accepted = out.model;
  double accepted_objective = out.initial_objective;
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t idx : order) {
      ++t;
      const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
      const auto& x = data.vectors[idx].values;
      const double y = data.labels[idx];
      const double margin = y * out.model.decision(x);
      const double shrink = 1.0 - eta * cfg.lambda;
      for (double& wi : w) wi *= shrink;
      if (margin < 1.0) {
        for (std::size_t i = 0; i < dim; ++i) w[i] += eta * y * x[i];
        out.model.bias += eta * bias_gain * y;
      }
    }
    // Stochastic sweeps can climb; an epoch that does not improve is rolled
    // back while the step schedule keeps advancing.
    const double objective = svm_objective(out.model, data);
    if (objective <= accepted_objective) {
      accepted = out.model;
      accepted_objective = objective;
    } else {
      out.model = accepted;
    }
    out.epoch_objectives.push_back(accepted_objective);
  }
  return out;
}

SvmModel svm_train(const LabeledDataset& data, const SvmConfig& cfg) {
  return svm_train_with_history(data, cfg).model;
}

}  // namespace wavecloud
