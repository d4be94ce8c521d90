// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavecloud/dwt.hpp"
#include "wavecloud/image.hpp"
#include "wavecloud/scattering.hpp"

namespace wavecloud {

enum class FeatureSource { dwt_stats, scattering };
enum class Stat { energy, mean_abs, std };
enum class Normalization { none, zscore };

std::string_view stat_name(Stat s);
/// Parses a comma-separated list such as "energy,std"; result is deduplicated
/// and in canonical order (energy, mean_abs, std).
std::vector<Stat> parse_stats(std::string_view list);

/// Describes how a FeatureVector was produced.
///
/// For dwt-stats the vector walks subbands in pyramid order (level 1 lh,hl,hh,
/// ..., level J lh,hl,hh, then ll) and emits the requested stats per subband,
/// giving |stats| * (3J + 1) values. For scattering, `scattering_order` selects
/// the cascade depth and the layout follows scatter2d.
struct FeatureSpec {
  FeatureSource source = FeatureSource::dwt_stats;
  std::size_t levels = 1;
  std::vector<Stat> stats = {Stat::energy, Stat::mean_abs, Stat::std};
  Normalization normalization = Normalization::none;
  int scattering_order = 2;

  std::size_t dimension() const;
  std::vector<std::string> field_names() const;
  /// Stable identifier, e.g. "dwt-stats:J3:energy+mean_abs+std".
  std::string schema_id() const;
};

struct FeatureVector {
  std::vector<double> values;
  std::string schema_id;

  std::size_t size() const noexcept { return values.size(); }
  bool operator==(const FeatureVector&) const = default;
};

/// Subband statistics of a pyramid. energy = mean square, mean_abs = mean |c|,
/// std = population standard deviation. Throws if spec.levels != pyr.levels or
/// spec.source is not dwt-stats.
FeatureVector extract_dwt_stats(const SubbandPyramid2D& pyr, const FeatureSpec& spec);

FeatureVector scattering_feature_vector(const ScatteringFeature& feature, const FeatureSpec& spec);

/// Runs the transform named by `spec.source` on one tile. Does not normalize.
FeatureVector extract_features(const Image2D& tile, const Wavelet& w, const FeatureSpec& spec);

inline constexpr double kStdFloor = 1e-12;

/// Per-dimension z-score parameters learned from a training set.
struct NormalizationState {
  std::string schema_id;
  std::vector<double> mean;
  std::vector<double> stddev;  // population std, floored at kStdFloor
};

NormalizationState fit_normalizer(std::span<const FeatureVector> vectors);
FeatureVector apply_normalizer(const NormalizationState& state, const FeatureVector& v);

struct Tile {
  Image2D image;
  std::size_t grid_row = 0;
  std::size_t grid_col = 0;
};

/// Splits into tile x tile blocks in row-major order. `tile` must be even and
/// divide both dimensions.
std::vector<Tile> tile_image(const Image2D& img, std::size_t tile);
Image2D assemble_tiles(std::span<const Tile> tiles, std::size_t rows, std::size_t cols);

}  // namespace wavecloud
