// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/pnn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wavecloud {

PnnModel pnn_train(const LabeledDataset& data) {
  data.validate("pnn_train");
  if (data.empty()) throw std::invalid_argument("pnn_train: empty dataset");
  PnnModel m;
  m.dim = data.dimension();
  for (std::size_t i = 0; i < data.size(); ++i) m.classes[data.labels[i]].push_back(data.vectors[i].values);
  return m;
}

std::map<int, double> pnn_log_scores(const PnnModel& m, std::span<const double> v, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("pnn_predict: sigma must be positive");
  if (v.size() != m.dim) {
    throw std::invalid_argument("pnn_predict: vector has dimension " + std::to_string(v.size()) +
                                ", model expects " + std::to_string(m.dim));
  }
  if (m.classes.empty()) throw std::invalid_argument("pnn_predict: model has no classes");
  const double inv_two_var = 1.0 / (2.0 * sigma * sigma);
  std::map<int, double> scores;
  std::vector<double> exponents;
  for (const auto& [label, members] : m.classes) {
    exponents.clear();
    for (const auto& x : members) exponents.push_back(-squared_distance(v, x) * inv_two_var);
    const double top = *std::max_element(exponents.begin(), exponents.end());
    double acc = 0.0;
    for (double e : exponents) acc += std::exp(e - top);
    scores[label] = top + std::log(acc / static_cast<double>(members.size()));
  }
  return scores;
}

int pnn_predict(const PnnModel& m, std::span<const double> v, double sigma) {
  const auto scores = pnn_log_scores(m, v, sigma);
  int best = scores.begin()->first;
  double best_score = -std::numeric_limits<double>::infinity();
  for (const auto& [label, score] : scores) {
    if (score > best_score) {
      best_score = score;
      best = label;
    }
  }
  return best;
}

}  // namespace wavecloud
