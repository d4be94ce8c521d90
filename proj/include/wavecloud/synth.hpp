// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wavecloud/image.hpp"

namespace wavecloud {

inline constexpr int kGroundLabel = 0;
inline constexpr int kCloudLabel = 1;

/// Parameters of the synthetic cloud/ground tile generator.
struct SynthConfig {
  std::uint64_t seed = 7;
  std::size_t tile_size = 32;
  std::size_t count_per_class = 50;
  /// Gaussian blob width as a fraction of the tile size.
  double blob_scale = 0.18;
  /// Half-width of the uniform noise added to ground tiles.
  double noise_amplitude = 20.0;
};

struct TileSet {
  std::vector<Image2D> tiles;
  std::vector<int> labels;
};

/// Deterministic 8-bit tiles, alternating ground (even index) and cloud (odd index).
///
/// Cloud tiles are a dim background plus 1-3 Gaussian blobs with faint sensor
/// noise. Ground tiles are a mid-grey base with one oriented sinusoidal stripe
/// pattern (period 2.5-6 px) and uniform noise. Pixels are rounded and clamped
/// to 0..255 so the tiles survive a PGM round trip unchanged.
TileSet synth_tiles(const SynthConfig& cfg);

}  // namespace wavecloud
