// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "wavecloud/dataset.hpp"
#include "wavecloud/evaluate.hpp"
#include "wavecloud/features.hpp"
#include "wavecloud/model_io.hpp"
#include "wavecloud/som.hpp"
#include "wavecloud/svm.hpp"
#include "wavecloud/synth.hpp"

namespace wavecloud {

/// Features for every tile of a TileSet, labels carried over.
LabeledDataset tiles_to_dataset(const TileSet& tiles, const Wavelet& w, const FeatureSpec& spec);

/// Maps two dataset labels onto -1 (lower) / +1 (higher); returns the pair.
std::array<int, 2> to_svm_labels(LabeledDataset& data);

/// Trainers that produce self-contained ModelFiles (normalizer included when
/// `normalizer` is set). Labels keep their dataset meaning.
ModelFile train_svm_model(const LabeledDataset& data, const SvmConfig& cfg,
                          const std::optional<NormalizationState>& normalizer);
ModelFile train_som_model(const LabeledDataset& data, const SomConfig& cfg,
                          const std::optional<NormalizationState>& normalizer);
ModelFile train_pnn_model(const LabeledDataset& data,
                          const std::optional<NormalizationState>& normalizer);

EvaluationReport evaluate_model(const ModelFile& model, const LabeledDataset& data, double sigma);

/// Cloud-vs-ground experiment: independent seeded train and held-out sets,
/// dwt-stats features with z-scoring fitted on the training set, then each
/// classifier.
struct PipelineConfig {
  SynthConfig train_synth{7, 32, 100, 0.18, 20.0};
  std::uint64_t test_seed = 8;
  std::string wavelet = "haar";
  std::size_t levels = 3;
  SvmConfig svm{1e-2, 50, 7};
  SomConfig som{3, 3, 0.5, 0.01, 1.5, 0.3, 20, 7};
  double pnn_sigma = 1.0;
};

struct PipelineResult {
  double svm_accuracy = 0.0;
  double som_accuracy = 0.0;
  double pnn_accuracy = 0.0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
};

PipelineResult run_pipeline(const PipelineConfig& cfg);

}  // namespace wavecloud
