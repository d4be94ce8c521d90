// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/pipeline.hpp"

#include <stdexcept>

#include "wavecloud/pnn.hpp"

namespace wavecloud {

LabeledDataset tiles_to_dataset(const TileSet& tiles, const Wavelet& w, const FeatureSpec& spec) {
  LabeledDataset data;
  for (std::size_t i = 0; i < tiles.tiles.size(); ++i)
    data.add(extract_features(tiles.tiles[i], w, spec), tiles.labels[i]);
  return data;
}

std::array<int, 2> to_svm_labels(LabeledDataset& data) {
  const auto classes = data.classes();
  if (classes.size() != 2) {
    throw std::invalid_argument("svm_train: binary labels required, found " +
                                std::to_string(classes.size()) + " distinct classes");
  }
  for (int& y : data.labels) y = (y == classes[1]) ? 1 : -1;
  return {classes[0], classes[1]};
}

namespace {

LabeledDataset prepared(const LabeledDataset& data, const std::optional<NormalizationState>& norm) {
  return norm ? normalize_dataset(*norm, data) : data;
}

}  // namespace

ModelFile train_svm_model(const LabeledDataset& data, const SvmConfig& cfg,
                          const std::optional<NormalizationState>& normalizer) {
  LabeledDataset train = prepared(data, normalizer);
  ModelFile model;
  model.schema_id = data.vectors.empty() ? "" : data.vectors.front().schema_id;
  model.normalizer = normalizer;
  model.svm_classes = to_svm_labels(train);
  model.model = svm_train(train, cfg);
  return model;
}

ModelFile train_som_model(const LabeledDataset& data, const SomConfig& cfg,
                          const std::optional<NormalizationState>& normalizer) {
  const LabeledDataset train = prepared(data, normalizer);
  SomClassifier som{som_train(train.vectors, cfg), {}};
  som.unit_labels = som_label_units(som.grid, train);
  ModelFile model;
  model.schema_id = data.vectors.front().schema_id;
  model.normalizer = normalizer;
  model.model = std::move(som);
  return model;
}

ModelFile train_pnn_model(const LabeledDataset& data,
                          const std::optional<NormalizationState>& normalizer) {
  ModelFile model;
  model.model = pnn_train(prepared(data, normalizer));
  model.schema_id = data.vectors.front().schema_id;
  model.normalizer = normalizer;
  return model;
}

EvaluationReport evaluate_model(const ModelFile& model, const LabeledDataset& data, double sigma) {
  const std::string schema = model.schema_id;
  return evaluate(
      [&](std::span<const double> v) {
        return model.predict(FeatureVector{{v.begin(), v.end()}, schema}, sigma);
      },
      data);
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  const Wavelet w = wavelet_by_name(cfg.wavelet);
  FeatureSpec spec;
  spec.levels = cfg.levels;
  spec.normalization = Normalization::zscore;

  SynthConfig test_synth = cfg.train_synth;
  test_synth.seed = cfg.test_seed;
  const LabeledDataset train = tiles_to_dataset(synth_tiles(cfg.train_synth), w, spec);
  const LabeledDataset test = tiles_to_dataset(synth_tiles(test_synth), w, spec);
  const NormalizationState norm = fit_normalizer(train.vectors);

  PipelineResult result;
  result.train_size = train.size();
  result.test_size = test.size();
  result.svm_accuracy = evaluate_model(train_svm_model(train, cfg.svm, norm), test, cfg.pnn_sigma).accuracy;
  result.som_accuracy = evaluate_model(train_som_model(train, cfg.som, norm), test, cfg.pnn_sigma).accuracy;
  result.pnn_accuracy = evaluate_model(train_pnn_model(train, norm), test, cfg.pnn_sigma).accuracy;
  return result;
}

}  // namespace wavecloud
