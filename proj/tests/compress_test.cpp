// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/compress.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracle.hpp"

namespace wavecloud {
namespace {

TEST(Compress, KeptCount) {
  EXPECT_EQ(kept_coefficient_count(0.0, 100), 0u);
  EXPECT_EQ(kept_coefficient_count(1.0, 100), 100u);
  EXPECT_EQ(kept_coefficient_count(0.125, 8), 1u);
  EXPECT_EQ(kept_coefficient_count(0.126, 8), 2u);
  EXPECT_EQ(kept_coefficient_count(0.3, 10), 3u);
  EXPECT_EQ(kept_coefficient_count(0.1, 1024), 103u);
  EXPECT_EQ(kept_coefficient_count(1e-6, 10), 1u);
  EXPECT_THROW(kept_coefficient_count(-0.1, 10), std::invalid_argument);
  EXPECT_THROW(kept_coefficient_count(1.5, 10), std::invalid_argument);
  EXPECT_THROW(kept_coefficient_count(std::nan(""), 10), std::invalid_argument);
}

TEST(Compress, TiesBreakTowardLowerIndex) {
  const std::vector<double> v{1.0, -3.0, 3.0, 2.0, -3.0};
  EXPECT_EQ(largest_magnitude_indices(v, 2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(largest_magnitude_indices(v, 4), (std::vector<std::size_t>{1, 2, 4, 3}));
  std::vector<double> w = v;
  EXPECT_EQ(threshold_keep_largest(w, 0.4), 2u);
  EXPECT_EQ(w, (std::vector<double>{0.0, -3.0, 3.0, 0.0, 0.0}));
}

TEST(Compress, StepSignalSurvivesOneEighth) {
  const std::vector<double> x{1, 1, 1, 1, -1, -1, -1, -1};
  const auto dec = dwt1d_multi(x, haar(), 3);
  const auto c = compress_threshold(dec, haar(), 0.125);
  EXPECT_EQ(c.report.kept_count, 1u);
  EXPECT_EQ(c.report.total_count, 8u);
  EXPECT_LT(oracle::max_abs_diff(idwt1d_multi(c.decomposition, haar()), x), 1e-12);
  EXPECT_GT(c.report.psnr_db, 250.0);
  EXPECT_DOUBLE_EQ(c.report.peak, 1.0);
}

TEST(Compress, KeepAllIsExact) {
  Rng rng(3);
  const Image2D img = oracle::random_image(rng, 16, 16, 50.0);
  const auto pyr = dwt2d_multi(img, daubechies(2), 2);
  const auto c = compress_threshold(pyr, daubechies(2), 1.0);
  EXPECT_EQ(c.report.kept_count, 256u);
  EXPECT_EQ(c.report.psnr_db, std::numeric_limits<double>::infinity());
  EXPECT_EQ(c.decomposition.flatten(), pyr.flatten());
}

TEST(Compress, KeepNoneZeroesEverything) {
  Rng rng(4);
  const auto x = oracle::random_signal(rng, 32);
  const auto c = compress_threshold(dwt1d_multi(x, haar(), 2), haar(), 0.0);
  EXPECT_EQ(c.report.kept_count, 0u);
  for (double v : c.decomposition.flatten()) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(std::isfinite(c.report.psnr_db));
}

TEST(Compress, PsnrMonotoneInKeepFraction) {
  Rng rng(5);
  for (const auto& w : {haar(), daubechies(4)}) {
    const Image2D img = oracle::random_image(rng, 32, 32, 100.0);
    const auto pyr = dwt2d_multi(img, w, 3);
    double previous = -std::numeric_limits<double>::infinity();
    for (int step = 0; step <= 20; ++step) {
      const double psnr_db = compress_threshold(pyr, w, step / 20.0).report.psnr_db;
      EXPECT_GE(psnr_db, previous) << w.name() << " keep " << step / 20.0;
      previous = psnr_db;
    }
  }
}

TEST(Compress, PsnrDirect) {
  const std::vector<double> a{1.0, -2.0, 0.0, 4.0};
  const std::vector<double> b{1.0, -2.0, 1.0, 4.0};
  // peak 4, mse 1/4 -> 10 log10(64)
  EXPECT_NEAR(psnr(a, b), 10.0 * std::log10(64.0), 1e-12);
  EXPECT_EQ(psnr(a, a), std::numeric_limits<double>::infinity());
  EXPECT_THROW(psnr(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Compress, SmoothImageIsSparse) {
  // Most energy of a smooth ramp sits in a handful of coefficients.
  Image2D img(32, 32);
  for (std::size_t r = 0; r < 32; ++r)
    for (std::size_t c = 0; c < 32; ++c) img(r, c) = 100.0 + 2.0 * r + 0.5 * c;
  const auto c = compress_threshold(dwt2d_multi(img, daubechies(2), 3), daubechies(2), 0.05);
  EXPECT_GT(c.report.psnr_db, 30.0);
}

}  // namespace
}  // namespace wavecloud
