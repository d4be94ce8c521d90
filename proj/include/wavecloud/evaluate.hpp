// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wavecloud/dataset.hpp"

namespace wavecloud {

using PredictFn = std::function<int(std::span<const double>)>;

/// confusion[i][j] counts samples of true class classes[i] predicted as
/// classes[j]; `classes` is the sorted union of true and predicted labels.
struct EvaluationReport {
  std::vector<int> classes;
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<int> predictions;
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

EvaluationReport evaluate(const PredictFn& predict, const LabeledDataset& data);

/// CSV with header "true\\predicted,<classes...>" then one row per true class,
/// followed by an "accuracy,<value>" line.
std::string evaluation_csv(const EvaluationReport& report);

}  // namespace wavecloud
