// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavecloud/rng.hpp"

namespace wavecloud {

namespace {

double quantize(double v) { return std::clamp(std::round(v), 0.0, 255.0); }

Image2D cloud_tile(Rng& rng, const SynthConfig& cfg) {
  const std::size_t n = cfg.tile_size;
  const double size = static_cast<double>(n);
  Image2D img(n, n, rng.uniform(30.0, 70.0));
  const auto blobs = 1 + rng.below(3);
  for (std::uint64_t b = 0; b < blobs; ++b) {
    const double cy = rng.uniform(0.0, size);
    const double cx = rng.uniform(0.0, size);
    const double sigma = cfg.blob_scale * size * rng.uniform(0.7, 1.3);
    const double amplitude = rng.uniform(90.0, 170.0);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const double dy = static_cast<double>(r) - cy;
        const double dx = static_cast<double>(c) - cx;
        img(r, c) += amplitude * std::exp(-(dx * dx + dy * dy) * inv);
      }
    }
  }
  const double sensor = 0.1 * cfg.noise_amplitude;
  for (double& p : img.pixels()) p = quantize(p + rng.uniform(-sensor, sensor));
  return img;
}

Image2D ground_tile(Rng& rng, const SynthConfig& cfg) {
  const std::size_t n = cfg.tile_size;
  const double base = rng.uniform(70.0, 130.0);
  const double amplitude = rng.uniform(15.0, 35.0);
  const double period = rng.uniform(2.5, 6.0);
  const double theta = rng.uniform(0.0, std::numbers::pi);
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double kx = std::cos(theta) * 2.0 * std::numbers::pi / period;
  const double ky = std::sin(theta) * 2.0 * std::numbers::pi / period;
  Image2D img(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double stripe =
          amplitude * std::sin(kx * static_cast<double>(c) + ky * static_cast<double>(r) + phase);
      const double noise = rng.uniform(-cfg.noise_amplitude, cfg.noise_amplitude);
      img(r, c) = quantize(base + stripe + noise);
    }
  }
  return img;
}

}  // namespace

TileSet synth_tiles(const SynthConfig& cfg) {
  if (cfg.tile_size < 2 || cfg.tile_size % 2 != 0)
    throw std::invalid_argument("synth_tiles: tile size must be even and >= 2");
  if (cfg.count_per_class == 0) throw std::invalid_argument("synth_tiles: count must be >= 1");
  if (!(cfg.blob_scale > 0.0)) throw std::invalid_argument("synth_tiles: blob scale must be positive");
  if (!(cfg.noise_amplitude >= 0.0))
    throw std::invalid_argument("synth_tiles: noise amplitude must be non-negative");

  Rng rng(cfg.seed);
  TileSet set;
  for (std::size_t i = 0; i < 2 * cfg.count_per_class; ++i) {
    const bool ground = i % 2 == 0;
    set.tiles.push_back(ground ? ground_tile(rng, cfg) : cloud_tile(rng, cfg));
    set.labels.push_back(ground ? kGroundLabel : kCloudLabel);
  }
  return set;
}

}  // namespace wavecloud
