// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/stft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wavecloud/image.hpp"

namespace wavecloud {

Spectrogram stft_spectrogram(std::span<const double> signal, std::size_t window_len,
                             std::size_t hop, WindowKind window) {
  if (window_len < 2 || window_len % 2 != 0)
    throw std::invalid_argument("stft_spectrogram: window length must be even and >= 2");
  if (hop == 0) throw std::invalid_argument("stft_spectrogram: hop must be >= 1");
  if (window_len > signal.size()) {
    throw std::invalid_argument("stft_spectrogram: window length " + std::to_string(window_len) +
                                " exceeds signal length " + std::to_string(signal.size()));
  }
  require_finite(signal, "stft_spectrogram");

  std::vector<double> taper(window_len, 1.0);
  if (window == WindowKind::hann) {
    for (std::size_t n = 0; n < window_len; ++n) {
      taper[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                      static_cast<double>(window_len));
    }
  }

  // Twiddle table indexed by (k * n) mod window_len keeps bin-aligned inputs exact-ish.
  std::vector<double> cos_table(window_len);
  std::vector<double> sin_table(window_len);
  for (std::size_t m = 0; m < window_len; ++m) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(window_len);
    cos_table[m] = std::cos(angle);
    sin_table[m] = std::sin(angle);
  }

  Spectrogram out;
  out.window_len = window_len;
  out.hop = hop;
  out.frames = (signal.size() - window_len) / hop + 1;
  out.bins = window_len / 2 + 1;
  out.magnitudes.assign(out.frames * out.bins, 0.0);

  std::vector<double> frame(window_len);
  for (std::size_t f = 0; f < out.frames; ++f) {
    const std::size_t start = f * hop;
    for (std::size_t n = 0; n < window_len; ++n) frame[n] = signal[start + n] * taper[n];
    for (std::size_t k = 0; k < out.bins; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t n = 0; n < window_len; ++n) {
        const std::size_t m = (k * n) % window_len;
        re += frame[n] * cos_table[m];
        im -= frame[n] * sin_table[m];
      }
      out.magnitudes[f * out.bins + k] = std::hypot(re, im);
    }
  }
  return out;
}

}  // namespace wavecloud
