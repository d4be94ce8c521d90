// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "wavecloud/dataset.hpp"

namespace wavecloud {

/// Probabilistic neural network: the training set itself, grouped by class.
/// The Parzen bandwidth is chosen at prediction time.
struct PnnModel {
  std::size_t dim = 0;
  std::map<int, std::vector<std::vector<double>>> classes;
};

PnnModel pnn_train(const LabeledDataset& data);

/// log of (1/n_c) sum_i exp(-||v - x_i||^2 / (2 sigma^2)) per class, evaluated
/// with log-sum-exp so tiny bandwidths do not underflow.
std::map<int, double> pnn_log_scores(const PnnModel& m, std::span<const double> v, double sigma);

/// Class with the largest Parzen density; ties go to the lowest class id.
int pnn_predict(const PnnModel& m, std::span<const double> v, double sigma);
inline int pnn_predict(const PnnModel& m, const FeatureVector& v, double sigma) {
  return pnn_predict(m, v.values, sigma);
}

}  // namespace wavecloud
