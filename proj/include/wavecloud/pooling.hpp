// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "wavecloud/image.hpp"
#include "wavecloud/wavelet.hpp"

namespace wavecloud {

/// Channel-major tensor: element (c, y, x) lives at (c * height + y) * width + x.
class FeatureMap {
 public:
  FeatureMap() = default;
  FeatureMap(std::size_t channels, std::size_t height, std::size_t width, double fill = 0.0);
  FeatureMap(std::size_t channels, std::size_t height, std::size_t width, std::vector<double> data);
  static FeatureMap from_image(const Image2D& img);

  std::size_t channels() const noexcept { return channels_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& operator()(std::size_t c, std::size_t y, std::size_t x) {
    return data_[(c * height_ + y) * width_ + x];
  }
  double operator()(std::size_t c, std::size_t y, std::size_t x) const {
    return data_[(c * height_ + y) * width_ + x];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Image2D channel(std::size_t c) const;
  void set_channel(std::size_t c, const Image2D& img);

  bool operator==(const FeatureMap&) const = default;

 private:
  std::size_t channels_ = 0;
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<double> data_;
};

/// Mean of each non-overlapping 2x2 block, per channel.
FeatureMap avg_pool2(const FeatureMap& map);
/// Max of each non-overlapping 2x2 block, per channel.
FeatureMap max_pool2(const FeatureMap& map);
/// Replicates every value into a 2x2 block (nearest-neighbour upsampling).
FeatureMap upsample_nearest2(const FeatureMap& map);

/// One DWT level per channel; input channel c becomes output channels
/// 4c..4c+3 holding ll, lh, hl, hh. Spatial dims halve, element count is kept.
FeatureMap dwt_pool(const FeatureMap& map, const Wavelet& w);
/// Exact inverse of dwt_pool; channel count must be a multiple of 4.
FeatureMap dwt_unpool(const FeatureMap& map, const Wavelet& w);

enum class PoolMethod { avg, max, dwt };
std::string_view pool_method_name(PoolMethod m);

struct PoolReport {
  PoolMethod method = PoolMethod::avg;
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  double reconstruction_rmse = 0.0;
};

double rmse(std::span<const double> a, std::span<const double> b);

/// Pools with each method, reconstructs as well as the method allows (nearest
/// upsampling for avg/max, dwt_unpool for dwt) and reports RMSE against `map`.
std::vector<PoolReport> info_loss_report(const FeatureMap& map, const Wavelet& w);

}  // namespace wavecloud
