// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavecloud/features.hpp"

namespace wavecloud {

/// Feature vectors with integer class ids, index-aligned.
struct LabeledDataset {
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
  std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }

  void add(FeatureVector v, int label);
  /// Sorted distinct labels.
  std::vector<int> classes() const;
  /// Throws std::invalid_argument on count mismatch, mixed schema, negative
  /// labels (unless `allow_negative`) or non-finite values.
  void validate(const char* context, bool allow_negative = false) const;
};

/// Wraps raw values with the "raw" schema; convenient for hand-built data.
FeatureVector raw_vector(std::vector<double> values);
LabeledDataset make_dataset(const std::vector<std::vector<double>>& points,
                            const std::vector<int>& labels);

struct DatasetSplit {
  LabeledDataset train;
  LabeledDataset test;
};

/// Seeded shuffle, then the first round(train_fraction * n) samples train.
DatasetSplit split_dataset(const LabeledDataset& data, double train_fraction, std::uint64_t seed);

/// Normalizes every vector of a dataset with a fitted state.
LabeledDataset normalize_dataset(const NormalizationState& state, const LabeledDataset& data);

double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace wavecloud
