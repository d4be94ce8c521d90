// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wavecloud/dwt.hpp"

namespace wavecloud {

FeatureMap::FeatureMap(std::size_t channels, std::size_t height, std::size_t width, double fill)
    : channels_(channels), height_(height), width_(width), data_(channels * height * width, fill) {}

FeatureMap::FeatureMap(std::size_t channels, std::size_t height, std::size_t width,
                       std::vector<double> data)
    : channels_(channels), height_(height), width_(width), data_(std::move(data)) {
  if (data_.size() != channels_ * height_ * width_)
    throw std::invalid_argument("FeatureMap: data size does not match channels x height x width");
}

FeatureMap FeatureMap::from_image(const Image2D& img) {
  return {1, img.rows(), img.cols(), std::vector<double>(img.pixels().begin(), img.pixels().end())};
}

Image2D FeatureMap::channel(std::size_t c) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(c * height_ * width_);
  return {height_, width_,
          std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(height_ * width_))};
}

void FeatureMap::set_channel(std::size_t c, const Image2D& img) {
  std::copy(img.pixels().begin(), img.pixels().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(c * height_ * width_));
}

namespace {

void require_even(const char* op, const FeatureMap& map) {
  if (map.height() < 2 || map.width() < 2 || map.height() % 2 != 0 || map.width() % 2 != 0) {
    throw std::invalid_argument(std::string(op) + ": spatial dims " + std::to_string(map.height()) +
                                "x" + std::to_string(map.width()) + " must be even");
  }
  require_finite(map.data(), op);
}

template <class Reduce>
FeatureMap pool2(const FeatureMap& map, Reduce reduce) {
  FeatureMap out(map.channels(), map.height() / 2, map.width() / 2);
  for (std::size_t c = 0; c < map.channels(); ++c)
    for (std::size_t y = 0; y < out.height(); ++y)
      for (std::size_t x = 0; x < out.width(); ++x)
        out(c, y, x) = reduce(map(c, 2 * y, 2 * x), map(c, 2 * y, 2 * x + 1),
                              map(c, 2 * y + 1, 2 * x), map(c, 2 * y + 1, 2 * x + 1));
  return out;
}

}  // namespace

FeatureMap avg_pool2(const FeatureMap& map) {
  require_even("avg_pool2", map);
  return pool2(map, [](double a, double b, double c, double d) { return (a + b + c + d) / 4.0; });
}

FeatureMap max_pool2(const FeatureMap& map) {
  require_even("max_pool2", map);
  return pool2(map, [](double a, double b, double c, double d) { return std::max({a, b, c, d}); });
}

FeatureMap upsample_nearest2(const FeatureMap& map) {
  FeatureMap out(map.channels(), 2 * map.height(), 2 * map.width());
  for (std::size_t c = 0; c < out.channels(); ++c)
    for (std::size_t y = 0; y < out.height(); ++y)
      for (std::size_t x = 0; x < out.width(); ++x) out(c, y, x) = map(c, y / 2, x / 2);
  return out;
}

FeatureMap dwt_pool(const FeatureMap& map, const Wavelet& w) {
  require_even("dwt_pool", map);
  FeatureMap out(4 * map.channels(), map.height() / 2, map.width() / 2);
  for (std::size_t c = 0; c < map.channels(); ++c) {
    const auto bands = dwt2d_single(map.channel(c), w);
    out.set_channel(4 * c + 0, bands.ll);
    out.set_channel(4 * c + 1, bands.lh);
    out.set_channel(4 * c + 2, bands.hl);
    out.set_channel(4 * c + 3, bands.hh);
  }
  return out;
}

FeatureMap dwt_unpool(const FeatureMap& map, const Wavelet& w) {
  if (map.channels() == 0 || map.channels() % 4 != 0) {
    throw std::invalid_argument("dwt_unpool: channel count " + std::to_string(map.channels()) +
                                " is not a multiple of 4");
  }
  FeatureMap out(map.channels() / 4, 2 * map.height(), 2 * map.width());
  for (std::size_t c = 0; c < out.channels(); ++c) {
    const Subbands2D bands{map.channel(4 * c + 0), map.channel(4 * c + 1), map.channel(4 * c + 2),
                           map.channel(4 * c + 3)};
    out.set_channel(c, idwt2d_single(bands, w));
  }
  return out;
}

std::string_view pool_method_name(PoolMethod m) {
  switch (m) {
    case PoolMethod::avg:
      return "avg";
    case PoolMethod::max:
      return "max";
    case PoolMethod::dwt:
      return "dwt";
  }
  return "?";
}

double rmse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("rmse: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

std::vector<PoolReport> info_loss_report(const FeatureMap& map, const Wavelet& w) {
  std::vector<PoolReport> out;
  const auto record = [&](PoolMethod method, const FeatureMap& pooled, const FeatureMap& rebuilt) {
    out.push_back({method, pooled.channels(), pooled.height(), pooled.width(),
                   rmse(map.data(), rebuilt.data())});
  };
  const auto avg = avg_pool2(map);
  record(PoolMethod::avg, avg, upsample_nearest2(avg));
  const auto max = max_pool2(map);
  record(PoolMethod::max, max, upsample_nearest2(max));
  const auto dwt = dwt_pool(map, w);
  record(PoolMethod::dwt, dwt, dwt_unpool(dwt, w));
  return out;
}

}  // namespace wavecloud
