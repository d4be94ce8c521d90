// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/stft.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"

namespace wavecloud {
namespace {

TEST(Stft, Shape) {
  const std::vector<double> x(100, 0.0);
  const auto s = stft_spectrogram(x, 16, 4);
  EXPECT_EQ(s.bins, 9u);
  EXPECT_EQ(s.frames, (100u - 16u) / 4u + 1u);
  EXPECT_EQ(s.magnitudes.size(), s.frames * s.bins);
  for (double m : s.magnitudes) EXPECT_EQ(m, 0.0);
}

TEST(Stft, BinAlignedSinusoid) {
  const std::size_t len = 32, f = 5;
  std::vector<double> x(256);
  for (std::size_t n = 0; n < x.size(); ++n)
    x[n] = std::cos(2.0 * std::numbers::pi * static_cast<double>(f * n) / len + 0.3);
  const auto s = stft_spectrogram(x, len, 7);
  for (std::size_t fr = 0; fr < s.frames; ++fr) {
    for (std::size_t k = 0; k < s.bins; ++k) {
      if (k == f) {
        EXPECT_NEAR(s.at(fr, k), len / 2.0, 1e-9);
      } else {
        EXPECT_NEAR(s.at(fr, k), 0.0, 1e-9) << "frame " << fr << " bin " << k;
      }
    }
  }
}

TEST(Stft, HannWindowOnConstant) {
  // Periodic Hann 0.5 - 0.5 cos(2 pi n / L): DC = L/2, first bin = L/4.
  const std::size_t len = 16;
  const std::vector<double> x(len, 1.0);
  const auto s = stft_spectrogram(x, len, 1, WindowKind::hann);
  ASSERT_EQ(s.frames, 1u);
  EXPECT_NEAR(s.at(0, 0), len / 2.0, 1e-12);
  EXPECT_NEAR(s.at(0, 1), len / 4.0, 1e-12);
  for (std::size_t k = 2; k < s.bins; ++k) EXPECT_NEAR(s.at(0, k), 0.0, 1e-12);
}

TEST(Stft, ResolutionTradeOff) {
  Rng rng(1);
  const auto x = oracle::random_signal(rng, 256);
  const auto a = stft_spectrogram(x, 16, 16);
  const auto b = stft_spectrogram(x, 32, 32);
  EXPECT_EQ((b.bins - 1), 2 * (a.bins - 1));
  EXPECT_EQ(a.frames, 2 * b.frames);
}

TEST(Stft, MagnitudesNonNegativeAndParsevalPerFrame) {
  Rng rng(2);
  const auto x = oracle::random_signal(rng, 64);
  const std::size_t len = 16;
  const auto s = stft_spectrogram(x, len, 8);
  for (std::size_t fr = 0; fr < s.frames; ++fr) {
    double time = 0.0, freq = 0.0;
    for (std::size_t n = 0; n < len; ++n) time += x[fr * 8 + n] * x[fr * 8 + n];
    for (std::size_t k = 0; k < s.bins; ++k) {
      EXPECT_GE(s.at(fr, k), 0.0);
      const double weight = (k == 0 || k == len / 2) ? 1.0 : 2.0;
      freq += weight * s.at(fr, k) * s.at(fr, k);
    }
    EXPECT_NEAR(freq / len, time, 1e-10);
  }
}

TEST(Stft, Errors) {
  const std::vector<double> x(10, 1.0);
  EXPECT_THROW(stft_spectrogram(x, 12, 1), std::invalid_argument);
  EXPECT_THROW(stft_spectrogram(x, 5, 1), std::invalid_argument);
  EXPECT_THROW(stft_spectrogram(x, 4, 0), std::invalid_argument);
}

}  // namespace
}  // namespace wavecloud
