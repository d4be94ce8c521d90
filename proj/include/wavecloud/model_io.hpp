// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wavecloud/features.hpp"
#include "wavecloud/pnn.hpp"
#include "wavecloud/som.hpp"
#include "wavecloud/svm.hpp"

namespace wavecloud {

/// A SOM plus the label assigned to each unit. Without labels, prediction
/// returns the BMU index.
struct SomClassifier {
  SomGrid grid;
  std::vector<int> unit_labels;

  int predict(std::span<const double> v) const;
};

/// Persisted model: one classifier, the schema of the features it expects and
/// the optional z-score normalizer applied before prediction.
///
/// Text layout, one record per line, numbers at 17 significant digits:
///
///   WCSMODEL v1
///   kind svm|som|pnn
///   dim <D>
///   schema <schema id>
///   normalizer none | normalizer zscore, then D lines "norm <mean> <std>"
///   svm: "classes <negative> <positive>", "lambda <v>", "bias <v>",
///        D lines "weight <v>"
///   som: "grid <W> <H>", "lr0 <v>", "lr_final <v>", "r0 <v>", "r_final <v>",
///        "epochs <n>", "seed <n>", then W*H lines "unit <label> <w_1> .. <w_D>"
///        (label -1 when unlabeled)
///   pnn: one line per stored vector "sample <label> <x_1> .. <x_D>"
///   end
struct ModelFile {
  std::string schema_id;
  std::optional<NormalizationState> normalizer;
  std::variant<SvmModel, SomClassifier, PnnModel> model;
  /// Dataset labels behind the SVM's -1 / +1 sides.
  std::array<int, 2> svm_classes = {-1, 1};

  std::string_view kind() const;
  std::size_t dimension() const;
  /// Normalizes (if configured) then predicts a dataset label. `sigma` is used
  /// by PNN only.
  int predict(const FeatureVector& v, double sigma = 1.0) const;
};

inline constexpr std::string_view kModelMagic = "WCSMODEL v1";

std::string serialize_model(const ModelFile& model);
ModelFile parse_model(std::string_view text);

void save_model(const std::filesystem::path& path, const ModelFile& model);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace wavecloud
