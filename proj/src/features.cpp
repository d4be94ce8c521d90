// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavecloud {

std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::energy:
      return "energy";
    case Stat::mean_abs:
      return "mean_abs";
    case Stat::std:
      return "std";
  }
  return "?";
}

std::vector<Stat> parse_stats(std::string_view list) {
  bool seen[3] = {false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view token = list.substr(start, end - start);
    if (token == "energy") {
      seen[0] = true;
    } else if (token == "mean_abs") {
      seen[1] = true;
    } else if (token == "std") {
      seen[2] = true;
    } else {
      throw std::invalid_argument("unknown feature statistic '" + std::string(token) +
                                  "' (expected energy, mean_abs, std)");
    }
    start = end + 1;
  }
  std::vector<Stat> out;
  if (seen[0]) out.push_back(Stat::energy);
  if (seen[1]) out.push_back(Stat::mean_abs);
  if (seen[2]) out.push_back(Stat::std);
  return out;
}

std::size_t FeatureSpec::dimension() const {
  if (source == FeatureSource::scattering) return scattering2d_size(levels, scattering_order);
  return stats.size() * (3 * levels + 1);
}

std::vector<std::string> FeatureSpec::field_names() const {
  std::vector<std::string> names;
  if (source == FeatureSource::scattering) {
    names.push_back("s0");
    if (scattering_order >= 1) {
      for (std::size_t j = 1; j <= levels; ++j)
        for (Band b : kDetailBands) names.push_back("s1_j" + std::to_string(j) + "_" + std::string(band_name(b)));
    }
    if (scattering_order >= 2) {
      for (std::size_t j = 1; j <= levels; ++j)
        for (Band b : kDetailBands)
          for (Band b2 : kDetailBands)
            names.push_back("s2_j" + std::to_string(j) + "_" + std::string(band_name(b)) + "_" +
                            std::string(band_name(b2)));
    }
    return names;
  }
  for (std::size_t j = 1; j <= levels; ++j) {
    for (Band b : kDetailBands) {
      for (Stat s : stats) {
        names.push_back("l" + std::to_string(j) + "_" + std::string(band_name(b)) + "_" +
                        std::string(stat_name(s)));
      }
    }
  }
  for (Stat s : stats) names.push_back("ll_" + std::string(stat_name(s)));
  return names;
}

std::string FeatureSpec::schema_id() const {
  if (source == FeatureSource::scattering) {
    return "scattering:J" + std::to_string(levels) + ":order" + std::to_string(scattering_order);
  }
  std::string id = "dwt-stats:J" + std::to_string(levels) + ":";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (i) id += "+";
    id += stat_name(stats[i]);
  }
  return id;
}

namespace {

void append_stats(std::span<const double> band, const std::vector<Stat>& stats,
                  std::vector<double>& out) {
  const double n = static_cast<double>(band.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  double sum_abs = 0.0;
  for (double c : band) {
    sum += c;
    sum_sq += c * c;
    sum_abs += std::abs(c);
  }
  const double mean = sum / n;
  double var = 0.0;
  for (double c : band) var += (c - mean) * (c - mean);
  var /= n;
  for (Stat s : stats) {
    switch (s) {
      case Stat::energy:
        out.push_back(sum_sq / n);
        break;
      case Stat::mean_abs:
        out.push_back(sum_abs / n);
        break;
      case Stat::std:
        out.push_back(std::sqrt(var));
        break;
    }
  }
}

// Mean anchored at the first element, so a constant column yields that
// constant exactly.
double anchored_mean(std::span<const FeatureVector> vectors, std::size_t dim) {
  const double anchor = vectors.front().values[dim];
  double offset = 0.0;
  for (const auto& v : vectors) offset += v.values[dim] - anchor;
  return anchor + offset / static_cast<double>(vectors.size());
}

}  // namespace

FeatureVector extract_dwt_stats(const SubbandPyramid2D& pyr, const FeatureSpec& spec) {
  if (spec.source != FeatureSource::dwt_stats)
    throw std::invalid_argument("extract_dwt_stats: feature spec source is not dwt-stats");
  if (spec.levels != pyr.levels) {
    throw std::invalid_argument("extract_dwt_stats: spec expects " + std::to_string(spec.levels) +
                                " levels but pyramid has " + std::to_string(pyr.levels));
  }
  if (spec.stats.empty()) throw std::invalid_argument("extract_dwt_stats: no statistics requested");
  FeatureVector out{{}, spec.schema_id()};
  out.values.reserve(spec.dimension());
  for (const auto& level : pyr.bands)
    for (Band b : kDetailBands) append_stats(level.band(b).pixels(), spec.stats, out.values);
  append_stats(pyr.ll.pixels(), spec.stats, out.values);
  return out;
}

FeatureVector scattering_feature_vector(const ScatteringFeature& feature, const FeatureSpec& spec) {
  if (feature.values.size() != spec.dimension()) {
    throw std::invalid_argument("scattering_feature_vector: feature has " +
                                std::to_string(feature.values.size()) + " values, spec expects " +
                                std::to_string(spec.dimension()));
  }
  return {feature.values, spec.schema_id()};
}

FeatureVector extract_features(const Image2D& tile, const Wavelet& w, const FeatureSpec& spec) {
  if (spec.source == FeatureSource::scattering) {
    ScatteringConfig cfg{spec.levels, spec.scattering_order, w};
    return scattering_feature_vector(scatter2d(tile, cfg), spec);
  }
  return extract_dwt_stats(dwt2d_multi(tile, w, spec.levels), spec);
}

NormalizationState fit_normalizer(std::span<const FeatureVector> vectors) {
  if (vectors.size() < 2) throw std::invalid_argument("fit_normalizer: need at least 2 vectors");
  const auto& first = vectors.front();
  for (const auto& v : vectors) {
    if (v.schema_id != first.schema_id || v.size() != first.size())
      throw std::invalid_argument("fit_normalizer: vectors do not share one schema");
    require_finite(v.values, "fit_normalizer");
  }
  NormalizationState state{first.schema_id, std::vector<double>(first.size()),
                           std::vector<double>(first.size())};
  for (std::size_t d = 0; d < first.size(); ++d) {
    const double mean = anchored_mean(vectors, d);
    double var = 0.0;
    for (const auto& v : vectors) var += (v.values[d] - mean) * (v.values[d] - mean);
    var /= static_cast<double>(vectors.size());
    state.mean[d] = mean;
    state.stddev[d] = std::max(std::sqrt(var), kStdFloor);
  }
  return state;
}

FeatureVector apply_normalizer(const NormalizationState& state, const FeatureVector& v) {
  if (v.schema_id != state.schema_id || v.size() != state.mean.size()) {
    throw std::invalid_argument("apply_normalizer: vector schema '" + v.schema_id +
                                "' does not match normalizer schema '" + state.schema_id + "'");
  }
  FeatureVector out{std::vector<double>(v.size()), v.schema_id};
  for (std::size_t d = 0; d < v.size(); ++d)
    out.values[d] = (v.values[d] - state.mean[d]) / state.stddev[d];
  return out;
}

std::vector<Tile> tile_image(const Image2D& img, std::size_t tile) {
  if (tile == 0 || tile % 2 != 0)
    throw std::invalid_argument("tile_image: tile size must be a positive even integer");
  if (img.rows() % tile != 0 || img.cols() % tile != 0) {
    throw std::invalid_argument("tile_image: tile size " + std::to_string(tile) +
                                " does not divide image " + std::to_string(img.rows()) + "x" +
                                std::to_string(img.cols()) + "; pad the image first");
  }
  std::vector<Tile> tiles;
  for (std::size_t gr = 0; gr < img.rows() / tile; ++gr) {
    for (std::size_t gc = 0; gc < img.cols() / tile; ++gc) {
      Tile t{Image2D(tile, tile), gr, gc};
      for (std::size_t r = 0; r < tile; ++r)
        for (std::size_t c = 0; c < tile; ++c) t.image(r, c) = img(gr * tile + r, gc * tile + c);
      tiles.push_back(std::move(t));
    }
  }
  return tiles;
}

Image2D assemble_tiles(std::span<const Tile> tiles, std::size_t rows, std::size_t cols) {
  Image2D out(rows, cols);
  for (const auto& t : tiles) {
    const std::size_t r0 = t.grid_row * t.image.rows();
    const std::size_t c0 = t.grid_col * t.image.cols();
    if (r0 + t.image.rows() > rows || c0 + t.image.cols() > cols)
      throw std::invalid_argument("assemble_tiles: tile lies outside the target image");
    for (std::size_t r = 0; r < t.image.rows(); ++r)
      for (std::size_t c = 0; c < t.image.cols(); ++c) out(r0 + r, c0 + c) = t.image(r, c);
  }
  return out;
}

}  // namespace wavecloud
