// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavecloud/dataset.hpp"

namespace wavecloud {

struct SomConfig {
  std::size_t width = 2;
  std::size_t height = 1;
  double lr0 = 0.5;
  double lr_final = 0.01;
  double r0 = 1.0;
  double r_final = 0.1;
  std::size_t epochs = 10;
  std::uint64_t seed = 0;
};

/// Kohonen map. Unit u = y * width + x sits at grid position (x, y); its
/// weight vector is row u of `weights`.
struct SomGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t dim = 0;
  std::vector<double> weights;
  SomConfig config;

  std::size_t units() const noexcept { return width * height; }
  std::span<const double> unit(std::size_t u) const { return {weights.data() + u * dim, dim}; }
  std::span<double> unit(std::size_t u) { return {weights.data() + u * dim, dim}; }
};

/// Seeded uniform draw inside the per-dimension range of the data.
SomGrid som_initialize(std::span<const FeatureVector> vectors, const SomConfig& cfg);

/// Online Kohonen training. Step t of T = epochs * n uses
///   lr(t) = lr0 * (lr_final / lr0)^(t / T),  r(t) = r0 * (r_final / r0)^(t / T)
/// and moves every unit by lr(t) * exp(-grid_dist^2 / (2 r(t)^2)) * (x - w_u).
/// Samples are visited in a seeded random order each epoch.
SomGrid som_train(std::span<const FeatureVector> vectors, const SomConfig& cfg);

/// Best-matching unit by Euclidean distance; ties go to the lowest index.
std::size_t som_assign(const SomGrid& grid, std::span<const double> v);
inline std::size_t som_assign(const SomGrid& grid, const FeatureVector& v) {
  return som_assign(grid, v.values);
}

/// Mean Euclidean distance from each vector to its BMU.
double som_quantization_error(const SomGrid& grid, std::span<const FeatureVector> vectors);

/// Majority label per unit over a labeled calibration set (ties to the lower
/// label). Units no sample maps to inherit the label of the nearest labeled
/// unit in weight space.
std::vector<int> som_label_units(const SomGrid& grid, const LabeledDataset& calibration);

}  // namespace wavecloud
