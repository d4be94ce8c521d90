// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavecloud/dwt.hpp"
#include "wavecloud/image.hpp"
#include "wavecloud/wavelet.hpp"

namespace wavecloud {

struct ScatteringConfig {
  std::size_t levels = 1;
  int max_order = 2;
  Wavelet wavelet = haar();
};

/// One path through the modulus/average cascade. `levels` holds j1 (and j2 for
/// order 2); `bands` is empty in 1D and holds the subband per order in 2D.
struct ScatteringPath {
  int order = 0;
  std::vector<std::size_t> levels;
  std::vector<Band> bands;

  std::string label() const;
  bool operator==(const ScatteringPath&) const = default;
};

struct ScatteringFeature {
  std::vector<ScatteringPath> paths;
  std::vector<double> values;
};

/// Number of values scatter1d produces: 1 + J + J(J-1)/2 (truncated by max_order).
std::size_t scattering1d_size(std::size_t levels, int max_order);
/// Number of values scatter2d produces: 1 + 3J + 9J (truncated by max_order).
std::size_t scattering2d_size(std::size_t levels, int max_order);

/// Orders 0..2 of a 1D scattering cascade built on the periodic DWT.
///
/// Detail sequences are amplitude-normalized, d~_j = 2^{-j/2} d_j, so that a
/// constant-amplitude oscillation yields the same modulus at every scale and the
/// order-1 energies never exceed the input mean square.
///   order 0:          mean(x)
///   order 1, j:       mean |d~_j(x)|
///   order 2, j1<j2:   mean |d~_{j2-j1}( |d~_{j1}(x)| )|
/// Paths are ordered by order, then lexicographically by level.
ScatteringFeature scatter1d(std::span<const double> signal, const ScatteringConfig& cfg);

/// 2D analogue on dwt2d_multi. Level-j bands are normalized by 2^{-j}.
///   order 0:  mean(pixels)
///   order 1:  mean |band| for level 1 lh,hl,hh ... level J lh,hl,hh
///   order 2:  for each order-1 band (same order), one Haar level of its modulus,
///             then mean |lh|, |hl|, |hh| (normalized by 1/2)
/// Order 2 needs the level-J bands to have even size, i.e. dims divisible by 2^{J+1}.
ScatteringFeature scatter2d(const Image2D& img, const ScatteringConfig& cfg);

}  // namespace wavecloud
