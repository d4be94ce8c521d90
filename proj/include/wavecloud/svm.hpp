// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavecloud/dataset.hpp"

namespace wavecloud {

/// Linear hyperplane w.x + b; labels are -1 / +1.
struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = 0.0;

  double decision(std::span<const double> v) const;
};

struct SvmConfig {
  double lambda = 1e-2;
  std::size_t epochs = 50;
  std::uint64_t seed = 0;
};

struct SvmTraining {
  SvmModel model;
  double initial_objective = 0.0;
  std::vector<double> epoch_objectives;  // one per epoch, after its last update
};

/// lambda/2 ||w||^2 + mean hinge loss over the dataset.
double svm_objective(const SvmModel& m, const LabeledDataset& data);

/// Stochastic primal subgradient descent (Pegasos) on the regularized hinge
/// loss with step 1/(lambda t) and a per-epoch seeded shuffle. An epoch whose
/// sweep raises the training objective is discarded, so epoch-end objectives
/// never increase.
///
/// The bias is unregularized; its step is scaled by the mean squared input norm
/// so that rescaling inputs by c together with lambda by c^2 reproduces the
/// same decisions.
SvmTraining svm_train_with_history(const LabeledDataset& data, const SvmConfig& cfg);
SvmModel svm_train(const LabeledDataset& data, const SvmConfig& cfg);

/// sign(w.v + b) with an exact zero mapped to +1.
int svm_predict(const SvmModel& m, std::span<const double> v);
inline int svm_predict(const SvmModel& m, const FeatureVector& v) { return svm_predict(m, v.values); }

}  // namespace wavecloud
