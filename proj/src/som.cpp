// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/som.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wavecloud/rng.hpp"

namespace wavecloud {

namespace {

void check_inputs(const char* op, std::span<const FeatureVector> vectors, const SomConfig& cfg) {
  const std::string ctx(op);
  if (vectors.empty()) throw std::invalid_argument(ctx + ": no input vectors");
  if (cfg.width == 0 || cfg.height == 0) throw std::invalid_argument(ctx + ": grid dims must be >= 1");
  if (cfg.epochs == 0) throw std::invalid_argument(ctx + ": epochs must be >= 1");
  if (!(cfg.lr0 > 0.0 && cfg.lr_final > 0.0))
    throw std::invalid_argument(ctx + ": learning rates must be positive");
  if (!(cfg.r0 > 0.0 && cfg.r_final > 0.0))
    throw std::invalid_argument(ctx + ": neighborhood radii must be positive");
  const std::size_t dim = vectors.front().size();
  if (dim == 0) throw std::invalid_argument(ctx + ": zero-dimensional vectors");
  for (const auto& v : vectors) {
    if (v.size() != dim || v.schema_id != vectors.front().schema_id)
      throw std::invalid_argument(ctx + ": vectors do not share one schema");
    require_finite(v.values, op);
  }
}

}  // namespace

SomGrid som_initialize(std::span<const FeatureVector> vectors, const SomConfig& cfg) {
  check_inputs("som_initialize", vectors, cfg);
  SomGrid grid;
  grid.width = cfg.width;
  grid.height = cfg.height;
  grid.dim = vectors.front().size();
  grid.config = cfg;

  std::vector<double> lo(vectors.front().values);
  std::vector<double> hi(vectors.front().values);
  for (const auto& v : vectors) {
    for (std::size_t d = 0; d < grid.dim; ++d) {
      lo[d] = std::min(lo[d], v.values[d]);
      hi[d] = std::max(hi[d], v.values[d]);
    }
  }
  Rng rng(cfg.seed);
  grid.weights.resize(grid.units() * grid.dim);
  for (std::size_t u = 0; u < grid.units(); ++u) {
    auto w = grid.unit(u);
    for (std::size_t d = 0; d < grid.dim; ++d) w[d] = rng.uniform(lo[d], hi[d]);
  }
  return grid;
}

SomGrid som_train(std::span<const FeatureVector> vectors, const SomConfig& cfg) {
  SomGrid grid = som_initialize(vectors, cfg);
  // Separate stream for sample order so initialization stays comparable
  // across epoch counts.
  Rng order_rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const double total = static_cast<double>(cfg.epochs * vectors.size());
  const double lr_ratio = cfg.lr_final / cfg.lr0;
  const double r_ratio = cfg.r_final / cfg.r0;
  std::size_t t = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    order_rng.shuffle(order);
    for (std::size_t idx : order) {
      const double progress = static_cast<double>(t) / total;
      const double lr = cfg.lr0 * std::pow(lr_ratio, progress);
      const double radius = cfg.r0 * std::pow(r_ratio, progress);
      const auto& x = vectors[idx].values;
      const std::size_t bmu = som_assign(grid, x);
      const double bx = static_cast<double>(bmu % grid.width);
      const double by = static_cast<double>(bmu / grid.width);
      for (std::size_t u = 0; u < grid.units(); ++u) {
        const double dx = static_cast<double>(u % grid.width) - bx;
        const double dy = static_cast<double>(u / grid.width) - by;
        const double influence = std::exp(-(dx * dx + dy * dy) / (2.0 * radius * radius));
        const double step = lr * influence;
        if (step == 0.0) continue;
        auto w = grid.unit(u);
        for (std::size_t d = 0; d < grid.dim; ++d) w[d] = std::lerp(w[d], x[d], step);
      }
      ++t;
    }
  }
  return grid;
}

std::size_t som_assign(const SomGrid& grid, std::span<const double> v) {
  if (v.size() != grid.dim) {
    throw std::invalid_argument("som_assign: vector has dimension " + std::to_string(v.size()) +
                                ", grid expects " + std::to_string(grid.dim));
  }
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < grid.units(); ++u) {
    const double d = squared_distance(grid.unit(u), v);
    if (d < best_dist) {
      best_dist = d;
      best = u;
    }
  }
  return best;
}

double som_quantization_error(const SomGrid& grid, std::span<const FeatureVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("som_quantization_error: no vectors");
  double total = 0.0;
  for (const auto& v : vectors) {
    const std::size_t bmu = som_assign(grid, v.values);
    total += std::sqrt(squared_distance(grid.unit(bmu), v.values));
  }
  return total / static_cast<double>(vectors.size());
}

std::vector<int> som_label_units(const SomGrid& grid, const LabeledDataset& calibration) {
  calibration.validate("som_label_units");
  if (calibration.empty()) throw std::invalid_argument("som_label_units: empty calibration set");
  std::vector<std::map<int, std::size_t>> votes(grid.units());
  for (std::size_t i = 0; i < calibration.size(); ++i)
    ++votes[som_assign(grid, calibration.vectors[i].values)][calibration.labels[i]];

  constexpr int kUnlabeled = -1;
  std::vector<int> labels(grid.units(), kUnlabeled);
  for (std::size_t u = 0; u < grid.units(); ++u) {
    std::size_t best_count = 0;
    for (const auto& [label, count] : votes[u]) {
      if (count > best_count) {
        best_count = count;
        labels[u] = label;
      }
    }
  }
  std::vector<int> resolved(labels);
  for (std::size_t u = 0; u < grid.units(); ++u) {
    if (labels[u] != kUnlabeled) continue;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < grid.units(); ++v) {
      if (labels[v] == kUnlabeled) continue;
      const double d = squared_distance(grid.unit(u), grid.unit(v));
      if (d < best_dist) {
        best_dist = d;
        resolved[u] = labels[v];
      }
    }
  }
  return resolved;
}

}  // namespace wavecloud
