// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wavecloud/rng.hpp"

namespace wavecloud {

void LabeledDataset::add(FeatureVector v, int label) {
  vectors.push_back(std::move(v));
  labels.push_back(label);
}

std::vector<int> LabeledDataset::classes() const {
  std::vector<int> out(labels);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void LabeledDataset::validate(const char* context, bool allow_negative) const {
  const std::string ctx(context);
  if (vectors.size() != labels.size()) {
    throw std::invalid_argument(ctx + ": " + std::to_string(vectors.size()) + " vectors but " +
                                std::to_string(labels.size()) + " labels");
  }
  if (vectors.empty()) return;
  const auto& first = vectors.front();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].schema_id != first.schema_id || vectors[i].size() != first.size())
      throw std::invalid_argument(ctx + ": vector " + std::to_string(i) + " has a different schema");
    require_finite(vectors[i].values, context);
    if (!allow_negative && labels[i] < 0)
      throw std::invalid_argument(ctx + ": negative label at index " + std::to_string(i));
  }
}

FeatureVector raw_vector(std::vector<double> values) { return {std::move(values), "raw"}; }

LabeledDataset make_dataset(const std::vector<std::vector<double>>& points,
                            const std::vector<int>& labels) {
  if (points.size() != labels.size())
    throw std::invalid_argument("make_dataset: points and labels differ in count");
  LabeledDataset data;
  for (std::size_t i = 0; i < points.size(); ++i) data.add(raw_vector(points[i]), labels[i]);
  return data;
}

DatasetSplit split_dataset(const LabeledDataset& data, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("split_dataset: train fraction must lie in (0, 1)");
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(order);
  const auto n_train =
      static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(data.size())));
  DatasetSplit split;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& dst = i < n_train ? split.train : split.test;
    dst.add(data.vectors[order[i]], data.labels[order[i]]);
  }
  return split;
}

LabeledDataset normalize_dataset(const NormalizationState& state, const LabeledDataset& data) {
  LabeledDataset out;
  for (std::size_t i = 0; i < data.size(); ++i)
    out.add(apply_normalizer(state, data.vectors[i]), data.labels[i]);
  return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace wavecloud
