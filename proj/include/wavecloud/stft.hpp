// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavecloud {

enum class WindowKind { rectangular, hann };

/// Time x frequency magnitude grid; frame-major.
struct Spectrogram {
  std::size_t window_len = 0;
  std::size_t hop = 0;
  std::size_t frames = 0;
  std::size_t bins = 0;  // window_len / 2 + 1
  std::vector<double> magnitudes;

  double at(std::size_t frame, std::size_t bin) const { return magnitudes[frame * bins + bin]; }
};

/// Magnitude of the naive DFT of each window. Frames start at 0, hop, 2*hop, ...
/// while the window fits entirely inside the signal.
Spectrogram stft_spectrogram(std::span<const double> signal, std::size_t window_len,
                             std::size_t hop, WindowKind window = WindowKind::rectangular);

}  // namespace wavecloud
